// Copyright 2026 The SpecGap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specgap/scoring.h"

#include <algorithm>
#include <numeric>
#include <string>

#include <Eigen/Cholesky>

#include "specgap/error.h"

namespace specgap {

std::vector<double> ssd_scores(const Eigen::MatrixXd& train,
                               const Eigen::MatrixXd& test) {
  if (train.rows() < 2) {
    throw InvalidArgument("ssd: need at least 2 training embeddings");
  }
  if (train.cols() != test.cols()) {
    throw DimensionError("ssd: train dimension " + std::to_string(train.cols()) +
                         " != test dimension " + std::to_string(test.cols()));
  }
  const Eigen::Index d = train.cols();
  const Eigen::RowVectorXd mu = train.colwise().mean();
  const Eigen::MatrixXd centered = train.rowwise() - mu;
  Eigen::MatrixXd cov =
      centered.transpose() * centered / static_cast<double>(train.rows() - 1);
  double gamma = 1e-4 * cov.trace() / static_cast<double>(d);
  if (!(gamma > 0.0)) gamma = 1e-12;
  cov.diagonal().array() += gamma;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(cov);

  std::vector<double> out(static_cast<std::size_t>(test.rows()));
  for (Eigen::Index i = 0; i < test.rows(); ++i) {
    const Eigen::VectorXd diff = (test.row(i) - mu).transpose();
    out[static_cast<std::size_t>(i)] = diff.dot(ldlt.solve(diff));
  }
  return out;
}

namespace {

// Indices of the k nearest rows of `train` to `x` by (distance, index),
// skipping `exclude` when it is a valid row. Distances returned alongside.
void nearest(const Eigen::MatrixXd& train, const Eigen::RowVectorXd& x,
             std::size_t k, Eigen::Index exclude, std::vector<Eigen::Index>& idx,
             std::vector<double>& dist) {
  std::vector<std::pair<double, Eigen::Index>> all;
  all.reserve(static_cast<std::size_t>(train.rows()));
  for (Eigen::Index j = 0; j < train.rows(); ++j) {
    if (j == exclude) continue;
    all.emplace_back((train.row(j) - x).norm(), j);
  }
  std::partial_sort(all.begin(), all.begin() + static_cast<long>(k), all.end());
  idx.resize(k);
  dist.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    dist[i] = all[i].first;
    idx[i] = all[i].second;
  }
}

// Guards the 1 / mean-reachability when duplicates make it zero.
constexpr double kReachEps = 1e-10;

}  // namespace

std::vector<double> lof_scores(const Eigen::MatrixXd& train,
                               const Eigen::MatrixXd& test,
                               std::size_t k_neighbors) {
  if (k_neighbors == 0) throw InvalidArgument("lof: k_neighbors must be >= 1");
  if (static_cast<std::size_t>(train.rows()) <= k_neighbors) {
    throw InvalidArgument("lof: training set of " + std::to_string(train.rows()) +
                          " rows must exceed k_neighbors = " +
                          std::to_string(k_neighbors));
  }
  if (train.cols() != test.cols()) {
    throw DimensionError("lof: train and test dimensions differ");
  }
  const Eigen::Index m = train.rows();
  const std::size_t k = k_neighbors;

  std::vector<std::vector<Eigen::Index>> nbr(static_cast<std::size_t>(m));
  std::vector<std::vector<double>> nbr_dist(static_cast<std::size_t>(m));
  std::vector<double> k_dist(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto s = static_cast<std::size_t>(i);
    nearest(train, train.row(i), k, i, nbr[s], nbr_dist[s]);
    k_dist[s] = nbr_dist[s].back();
  }
  std::vector<double> lrd(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < lrd.size(); ++i) {
    double reach = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      reach += std::max(k_dist[static_cast<std::size_t>(nbr[i][j])], nbr_dist[i][j]);
    }
    lrd[i] = 1.0 / (reach / static_cast<double>(k) + kReachEps);
  }

  std::vector<double> out(static_cast<std::size_t>(test.rows()));
  std::vector<Eigen::Index> idx;
  std::vector<double> dist;
  for (Eigen::Index t = 0; t < test.rows(); ++t) {
    nearest(train, test.row(t), k, -1, idx, dist);
    double reach = 0.0;
    double lrd_sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const auto o = static_cast<std::size_t>(idx[j]);
      reach += std::max(k_dist[o], dist[j]);
      lrd_sum += lrd[o];
    }
    const double lrd_p = 1.0 / (reach / static_cast<double>(k) + kReachEps);
    out[static_cast<std::size_t>(t)] = lrd_sum / static_cast<double>(k) / lrd_p;
  }
  return out;
}

}  // namespace specgap

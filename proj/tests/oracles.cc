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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include <Eigen/Dense>

namespace specgap::oracle {

Eigen::MatrixXd laplacian(std::size_t n, const std::vector<Edge>& edges,
                          LaplacianVariant variant) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : edges) {
    if (u != v) a(u, v) = a(v, u) = 1.0;
  }
  const Eigen::VectorXd deg = a.rowwise().sum();
  switch (variant) {
    case LaplacianVariant::kUnnormalized:
      return Eigen::MatrixXd(deg.asDiagonal()) - a;
    case LaplacianVariant::kSignless:
      return Eigen::MatrixXd(deg.asDiagonal()) + a;
    case LaplacianVariant::kNormalized: {
      Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (a(i, j) != 0.0) l(i, j) = -1.0 / std::sqrt(deg(i) * deg(j));
        }
      }
      return l;
    }
  }
  return a;
}

std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd m) {
  const Eigen::Index n = m.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
    }
    if (off < 1e-26 * std::max(1.0, m.squaredNorm())) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(m(p, q)) < 1e-300) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = m(i, i);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double auc(const std::vector<ScoredSample>& s) {
  double num = 0.0, pairs = 0.0;
  for (const auto& o : s) {
    if (o.true_label != DistLabel::kOOD) continue;
    for (const auto& i : s) {
      if (i.true_label != DistLabel::kID) continue;
      pairs += 1.0;
      num += o.score > i.score ? 1.0 : (o.score == i.score ? 0.5 : 0.0);
    }
  }
  return num / pairs;
}

namespace {

struct Point {
  double precision, recall, fpr, tpr;
};

// One point per distinct score threshold t (predict OOD when score >= t).
std::vector<Point> curve(const std::vector<ScoredSample>& s) {
  std::set<double, std::greater<>> thresholds;
  double pos = 0, neg = 0;
  for (const auto& x : s) {
    thresholds.insert(x.score);
    (x.true_label == DistLabel::kOOD ? pos : neg) += 1;
  }
  std::vector<Point> pts;
  for (double t : thresholds) {
    double tp = 0, fp = 0;
    for (const auto& x : s) {
      if (x.score >= t) (x.true_label == DistLabel::kOOD ? tp : fp) += 1;
    }
    pts.push_back({tp / (tp + fp), tp / pos, fp / neg, tp / pos});
  }
  return pts;
}

}  // namespace

double aupr(const std::vector<ScoredSample>& s) {
  const std::vector<Point> pts = curve(s);
  double area = 0.0, prev_recall = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double env = 0.0;
    for (std::size_t j = i; j < pts.size(); ++j) env = std::max(env, pts[j].precision);
    area += (pts[i].recall - prev_recall) * env;
    prev_recall = pts[i].recall;
  }
  return area;
}

double fpr95(const std::vector<ScoredSample>& s) {
  double best = 1.0;
  for (const Point& p : curve(s)) {
    if (p.tpr >= 0.95) best = std::min(best, p.fpr);
  }
  return best;
}

namespace {

double dist(const Eigen::MatrixXd& a, Eigen::Index i, const Eigen::MatrixXd& b, Eigen::Index j) {
  return (a.row(i) - b.row(j)).norm();
}

// Indices of the k nearest training rows to `q`, skipping `self`.
std::vector<Eigen::Index> knn(const Eigen::MatrixXd& train, const Eigen::MatrixXd& q,
                              Eigen::Index qi, Eigen::Index self, std::size_t k) {
  std::vector<std::pair<double, Eigen::Index>> d;
  for (Eigen::Index j = 0; j < train.rows(); ++j) {
    if (j != self) d.push_back({dist(q, qi, train, j), j});
  }
  std::sort(d.begin(), d.end());
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(d[i].second);
  return out;
}

}  // namespace

std::vector<double> lof(const Eigen::MatrixXd& train, const Eigen::MatrixXd& test,
                        std::size_t k) {
  const Eigen::Index n = train.rows();
  std::vector<double> kdist(n), lrd(n);
  std::vector<std::vector<Eigen::Index>> nb(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    nb[i] = knn(train, train, i, i, k);
    kdist[i] = dist(train, i, train, nb[i].back());
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Eigen::Index j : nb[i]) sum += std::max(kdist[j], dist(train, i, train, j));
    lrd[i] = 1.0 / (sum / static_cast<double>(k));
  }
  std::vector<double> out;
  for (Eigen::Index t = 0; t < test.rows(); ++t) {
    const auto nbt = knn(train, test, t, -1, k);
    double sum = 0.0;
    for (Eigen::Index j : nbt) sum += std::max(kdist[j], dist(test, t, train, j));
    const double lrd_t = 1.0 / (sum / static_cast<double>(k));
    double ratio = 0.0;
    for (Eigen::Index j : nbt) ratio += lrd[j] / lrd_t;
    out.push_back(ratio / static_cast<double>(k));
  }
  return out;
}

std::vector<double> ssd(const Eigen::MatrixXd& train, const Eigen::MatrixXd& test) {
  const Eigen::Index n = train.rows(), d = train.cols();
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = 0; i < n; ++i) mu += train.row(i).transpose();
  mu /= static_cast<double>(n);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd c = train.row(i).transpose() - mu;
    cov += c * c.transpose();
  }
  cov /= static_cast<double>(n - 1);
  const double tr = cov.trace();
  const double gamma = tr > 0 ? 1e-4 * tr / static_cast<double>(d) : 1e-12;
  const Eigen::MatrixXd inv = (cov + gamma * Eigen::MatrixXd::Identity(d, d)).fullPivLu().inverse();
  std::vector<double> out;
  for (Eigen::Index t = 0; t < test.rows(); ++t) {
    const Eigen::VectorXd c = test.row(t).transpose() - mu;
    out.push_back(c.dot(inv * c));
  }
  return out;
}

double best_balanced_error(const std::vector<double>& id, const std::vector<double>& ood) {
  std::vector<double> ts = {-std::numeric_limits<double>::infinity()};
  ts.insert(ts.end(), id.begin(), id.end());
  ts.insert(ts.end(), ood.begin(), ood.end());
  double best = 1.0;
  for (double t : ts) {
    for (int high_means_ood = 0; high_means_ood < 2; ++high_means_ood) {
      double id_wrong = 0, ood_wrong = 0;
      for (double g : id) id_wrong += high_means_ood ? (g > t) : !(g > t);
      for (double g : ood) ood_wrong += high_means_ood ? !(g > t) : (g > t);
      best = std::min(best, 0.5 * (id_wrong / id.size() + ood_wrong / ood.size()));
    }
  }
  return best;
}

Graph random_graph(std::uint64_t seed, std::size_t min_n, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = size(rng);
  const int kind = static_cast<int>(rng() % 3);
  std::vector<Edge> edges;
  if (kind == 0) {  // ER with random density
    const double p = 0.05 + 0.6 * u(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (u(rng) < p) edges.push_back({NodeId(i), NodeId(j)});
  } else if (kind == 1) {  // two-block SBM
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (u(rng) < ((i < half) == (j < half) ? 0.5 : 0.05)) edges.push_back({NodeId(i), NodeId(j)});
  } else {  // circulant: regular of even degree
    const std::size_t half_d = 1 + rng() % std::max<std::size_t>(1, std::min<std::size_t>(4, (n - 1) / 2));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 1; s <= half_d; ++s) edges.push_back({NodeId(i), NodeId((i + s) % n)});
  }
  return build_graph(n, edges);
}

}  // namespace specgap::oracle

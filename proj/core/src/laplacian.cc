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

#include "specgap/laplacian.h"

#include <cmath>
#include <string>

#include "specgap/error.h"

namespace specgap {

std::string_view to_string(LaplacianVariant variant) {
  switch (variant) {
    case LaplacianVariant::kUnnormalized:
      return "unnormalized";
    case LaplacianVariant::kNormalized:
      return "normalized";
    case LaplacianVariant::kSignless:
      return "signless";
  }
  return "unknown";
}

LaplacianVariant parse_laplacian_variant(std::string_view name) {
  if (name == "unnormalized") return LaplacianVariant::kUnnormalized;
  if (name == "normalized") return LaplacianVariant::kNormalized;
  if (name == "signless") return LaplacianVariant::kSignless;
  throw ConfigError("unknown Laplacian variant '" + std::string(name) + "'");
}

SparseSymMatrix::SparseSymMatrix(std::size_t dim,
                                 std::vector<std::size_t> row_offsets,
                                 std::vector<std::size_t> col_index,
                                 std::vector<double> values)
    : dim_(dim),
      row_offsets_(std::move(row_offsets)),
      col_index_(std::move(col_index)),
      values_(std::move(values)) {
  if (row_offsets_.size() != dim_ + 1 || col_index_.size() != values_.size() ||
      row_offsets_.back() != values_.size()) {
    throw DimensionError("inconsistent CSR arrays");
  }
}

void SparseSymMatrix::multiply(const double* x, double* y) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = 0.0;
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
      acc += values_[p] * x[col_index_[p]];
    }
    y[i] = acc;
  }
}

double SparseSymMatrix::max_abs_row_sum() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
      s += std::abs(values_[p]);
    }
    best = std::max(best, s);
  }
  return best;
}

Eigen::MatrixXd SparseSymMatrix::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
      out(static_cast<Eigen::Index>(i),
          static_cast<Eigen::Index>(col_index_[p])) += values_[p];
    }
  }
  return out;
}

SparseSymMatrix laplacian(const Graph& graph, LaplacianVariant variant) {
  const std::size_t n = graph.num_nodes();
  std::vector<double> inv_sqrt_deg;
  if (variant == LaplacianVariant::kNormalized) {
    inv_sqrt_deg.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto d = graph.degree(static_cast<NodeId>(v));
      inv_sqrt_deg[v] = d == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(d));
    }
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<std::size_t> cols;
  std::vector<double> vals;
  cols.reserve(2 * graph.num_edges() + n);
  vals.reserve(2 * graph.num_edges() + n);

  for (std::size_t v = 0; v < n; ++v) {
    const auto row = graph.neighbors(static_cast<NodeId>(v));
    const double deg = static_cast<double>(row.size());
    double diag = 0.0;
    switch (variant) {
      case LaplacianVariant::kUnnormalized:
      case LaplacianVariant::kSignless:
        diag = deg;
        break;
      case LaplacianVariant::kNormalized:
        diag = 1.0;
        break;
    }
    bool diag_written = false;
    for (const NodeId u : row) {
      if (!diag_written && u > v) {
        cols.push_back(v);
        vals.push_back(diag);
        diag_written = true;
      }
      double off = 0.0;
      switch (variant) {
        case LaplacianVariant::kUnnormalized:
          off = -1.0;
          break;
        case LaplacianVariant::kSignless:
          off = 1.0;
          break;
        case LaplacianVariant::kNormalized:
          off = -inv_sqrt_deg[v] * inv_sqrt_deg[u];
          break;
      }
      cols.push_back(u);
      vals.push_back(off);
    }
    if (!diag_written) {
      cols.push_back(v);
      vals.push_back(diag);
    }
    offsets[v + 1] = cols.size();
  }
  return SparseSymMatrix(n, std::move(offsets), std::move(cols),
                         std::move(vals));
}

Eigen::VectorXd spmv(const SparseSymMatrix& matrix, const Eigen::VectorXd& x) {
  if (static_cast<std::size_t>(x.size()) != matrix.dim()) {
    throw DimensionError("spmv: vector length " + std::to_string(x.size()) +
                         " does not match matrix dimension " +
                         std::to_string(matrix.dim()));
  }
  Eigen::VectorXd y(x.size());
  matrix.multiply(x.data(), y.data());
  return y;
}

}  // namespace specgap

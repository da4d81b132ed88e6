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

#ifndef SPECGAP_LAPLACIAN_H_
#define SPECGAP_LAPLACIAN_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "specgap/graph.h"

namespace specgap {

enum class LaplacianVariant {
  kUnnormalized,  // L = D - A
  kNormalized,    // L = I - D^{-1/2} A D^{-1/2}, D^{-1/2}_ii = 0 if deg 0
  kSignless,      // Q = D + A
};

std::string_view to_string(LaplacianVariant variant);
// Accepts "unnormalized", "normalized", "signless".
LaplacianVariant parse_laplacian_variant(std::string_view name);

// Symmetric matrix in CSR form. Column indices are sorted within a row and
// the diagonal is stored explicitly.
class SparseSymMatrix {
 public:
  SparseSymMatrix() : row_offsets_{0} {}
  SparseSymMatrix(std::size_t dim, std::vector<std::size_t> row_offsets,
                  std::vector<std::size_t> col_index,
                  std::vector<double> values);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return values_.size(); }

  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::size_t>& col_index() const { return col_index_; }
  const std::vector<double>& values() const { return values_; }

  // y = M x over the stored entries. Sizes are the caller's responsibility.
  void multiply(const double* x, double* y) const;

  // Largest absolute row sum; an upper bound on the spectral radius.
  double max_abs_row_sum() const;

  Eigen::MatrixXd to_dense() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::size_t> col_index_;
  std::vector<double> values_;
};

SparseSymMatrix laplacian(const Graph& graph, LaplacianVariant variant);

// Throws DimensionError when x.size() != matrix.dim().
Eigen::VectorXd spmv(const SparseSymMatrix& matrix, const Eigen::VectorXd& x);

}  // namespace specgap

#endif  // SPECGAP_LAPLACIAN_H_

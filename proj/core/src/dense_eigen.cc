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

#include "specgap/dense_eigen.h"

#include <string>

#include <Eigen/Eigenvalues>

#include "specgap/error.h"

namespace specgap {

DenseSpectrum dense_eig(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw DimensionError("dense_eig: matrix is not square");
  }
  if (static_cast<std::size_t>(matrix.rows()) > kDenseEigenMaxDim) {
    throw ConfigError("dense_eig: dimension " + std::to_string(matrix.rows()) +
                      " exceeds the dense guard of " +
                      std::to_string(kDenseEigenMaxDim));
  }
  DenseSpectrum out;
  const Eigen::Index n = matrix.rows();
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw Error("dense_eig: symmetric eigensolver did not converge");
  }
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()[n - 1 - i];
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

DenseSpectrum dense_eig(const SparseSymMatrix& matrix) {
  if (matrix.dim() > kDenseEigenMaxDim) {
    throw ConfigError("dense_eig: dimension " + std::to_string(matrix.dim()) +
                      " exceeds the dense guard of " +
                      std::to_string(kDenseEigenMaxDim));
  }
  return dense_eig(matrix.to_dense());
}

}  // namespace specgap

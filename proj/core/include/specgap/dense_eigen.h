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

#ifndef SPECGAP_DENSE_EIGEN_H_
#define SPECGAP_DENSE_EIGEN_H_

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "specgap/laplacian.h"

namespace specgap {

inline constexpr std::size_t kDenseEigenMaxDim = 2000;

struct DenseSpectrum {
  std::vector<double> values;  // descending
  Eigen::MatrixXd vectors;     // orthonormal columns, paired with values
};

// Full symmetric eigendecomposition, used as the reference oracle for the
// Lanczos solver. Refuses (ConfigError) matrices above kDenseEigenMaxDim.
DenseSpectrum dense_eig(const SparseSymMatrix& matrix);
DenseSpectrum dense_eig(const Eigen::MatrixXd& matrix);

}  // namespace specgap

#endif  // SPECGAP_DENSE_EIGEN_H_

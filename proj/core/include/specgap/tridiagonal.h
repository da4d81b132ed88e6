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

#ifndef SPECGAP_TRIDIAGONAL_H_
#define SPECGAP_TRIDIAGONAL_H_

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace specgap {

// Symmetric tridiagonal matrix: alpha on the diagonal, beta on the first
// off-diagonal (beta.size() == alpha.size() - 1 when non-empty).
struct Tridiagonal {
  std::vector<double> alpha;
  std::vector<double> beta;

  std::size_t size() const { return alpha.size(); }
  Eigen::MatrixXd to_dense() const;
};

struct TridiagonalEigen {
  std::vector<double> values;  // ascending
  Eigen::MatrixXd vectors;     // column i pairs with values[i]
};

// Implicit QL with Wilkinson shifts. Throws Error if a value fails to
// converge in 64 sweeps.
std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t);
TridiagonalEigen tridiagonal_eigen(const Tridiagonal& t);

}  // namespace specgap

#endif  // SPECGAP_TRIDIAGONAL_H_

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

#include "specgap/tridiagonal.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "specgap/error.h"

namespace specgap {
namespace {

void check_shape(const Tridiagonal& t) {
  if (!t.alpha.empty() && t.beta.size() + 1 != t.alpha.size()) {
    throw DimensionError("tridiagonal: beta must have alpha.size() - 1 entries");
  }
}

// d: diagonal (overwritten with eigenvalues), e: off-diagonal padded to
// d.size() with e[n-1] = 0. When z is non-null its columns are rotated along.
void implicit_ql(std::vector<double>& d, std::vector<double>& e,
                 Eigen::MatrixXd* z) {
  const int n = static_cast<int>(d.size());
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (++iter > 64) throw Error("tridiagonal QL failed to converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool deflated = false;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          for (Eigen::Index k = 0; k < z->rows(); ++k) {
            f = (*z)(k, i + 1);
            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
            (*z)(k, i) = c * (*z)(k, i) - s * f;
          }
        }
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

Eigen::MatrixXd Tridiagonal::to_dense() const {
  const auto n = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = alpha[i];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    out(i, i + 1) = beta[i];
    out(i + 1, i) = beta[i];
  }
  return out;
}

std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t) {
  check_shape(t);
  std::vector<double> d = t.alpha;
  std::vector<double> e(d.size(), 0.0);
  std::copy(t.beta.begin(), t.beta.end(), e.begin());
  implicit_ql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

TridiagonalEigen tridiagonal_eigen(const Tridiagonal& t) {
  check_shape(t);
  const auto n = static_cast<Eigen::Index>(t.alpha.size());
  std::vector<double> d = t.alpha;
  std::vector<double> e(d.size(), 0.0);
  std::copy(t.beta.begin(), t.beta.end(), e.begin());
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
  implicit_ql(d, e, &z);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = d[order[i]];
    out.vectors.col(i) = z.col(order[i]);
  }
  return out;
}

}  // namespace specgap

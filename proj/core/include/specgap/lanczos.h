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

#ifndef SPECGAP_LANCZOS_H_
#define SPECGAP_LANCZOS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "specgap/laplacian.h"
#include "specgap/tridiagonal.h"

namespace specgap {

struct LanczosConfig {
  // Number of largest eigenpairs requested.
  std::size_t k = 2;
  // Stop when each of the top-k Ritz values moves by less than this between
  // consecutive iterations.
  double tol = 1e-8;
  // Iteration budget across all restarts; 0 selects min(dim, 300).
  std::size_t max_iter = 0;
  std::uint64_t seed = 0;
  bool full_reorth = true;
  // Fresh-start blocks allowed after the first one (invariant subspace
  // breakdowns and multiplicity checks both count).
  std::size_t max_restarts = 3;
  // A pair is accepted when ||M u - lambda u|| <= residual_tol * max(1, lambda_max).
  double residual_tol = 1e-6;
  // Keep per-iteration Ritz values and the final basis orthogonality loss.
  bool record_history = false;
  friend bool operator==(const LanczosConfig&, const LanczosConfig&) = default;
};

struct SpectralSummary {
  std::vector<double> eigenvalues;  // descending
  Eigen::MatrixXd eigenvectors;     // dim x k, unit columns
  std::size_t iterations_used = 0;
  std::size_t restarts = 0;
  bool converged = false;
  std::vector<double> residual_norms;

  // Filled only with LanczosConfig::record_history.
  std::vector<std::vector<double>> ritz_history;
  double orthogonality_loss = 0.0;  // max |Q^T Q - I|

  std::size_t size() const { return eigenvalues.size(); }
};

bool operator==(const SpectralSummary& a, const SpectralSummary& b);

// Top-k eigenpairs of a symmetric matrix by Lanczos iteration with full
// reorthogonalization.
//
// The start vector is a seeded standard-normal draw, normalized. Each
// iteration extends the running tridiagonal T and recomputes its Ritz
// values; a block ends when the top-k Ritz values are stable to `tol`
// and their residual estimates pass, or when the Krylov space becomes
// invariant. A single Krylov sequence sees only one direction of each
// eigenspace, so every block is followed by a fresh random block
// orthogonal to all previous vectors (the unfinished residual direction of
// a converged block is kept as an orthogonalization guard, which keeps the
// combined projection block diagonal). Iteration stops once a fresh block
// leaves the top-k unchanged.
//
// Ritz values within 64 eps max_abs_row_sum of the one above are made equal
// to it. Eigenvectors are Ritz vectors lifted through the basis, signed so that
// the largest-magnitude entry (lowest index on ties) is positive. Output is
// bit-identical for identical (matrix, config).
//
// Throws ConfigError when k == 0, k > dim, tol <= 0 or max_iter < k.
SpectralSummary lanczos_top_k(const SparseSymMatrix& matrix,
                              const LanczosConfig& config);

// Flips v in place so its largest-magnitude entry is positive.
void normalize_sign(Eigen::Ref<Eigen::VectorXd> v);

// Runs exactly `steps` Lanczos steps from a seeded start vector (fewer only
// on an invariant-subspace breakdown) and returns the tridiagonal
// projection. No stopping test and no restarts; used for cost measurement.
Tridiagonal lanczos_tridiagonalize(const SparseSymMatrix& matrix, std::size_t steps,
                                   std::uint64_t seed, bool full_reorth = true);

}  // namespace specgap

#endif  // SPECGAP_LANCZOS_H_

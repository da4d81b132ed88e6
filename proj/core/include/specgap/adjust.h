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

#ifndef SPECGAP_ADJUST_H_
#define SPECGAP_ADJUST_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

#include <Eigen/Core>

#include "specgap/lanczos.h"

namespace specgap {

// Dense node-feature matrix, one row per node.
using FeatureMatrix = Eigen::MatrixXd;

// How the spectral gap turns into the removal coefficient.
enum class GapMode {
  kScaledSubtraction,   // c = lambda_n - lambda_{n-i}
  kSimpleSubtraction,   // c = 1
  kRelativeDifference,  // c = (lambda_n - lambda_{n-i}) / lambda_n
  kNoAdjustment,        // c = 0
};

// How the rank-1 term is folded into X.
enum class CombineMode {
  kSubtraction,     // X - c u v^T
  kMultiplication,  // X .* (1 - c u 1^T), a row scaling
  kConcatenation,   // [X | c u v^T]
};

struct Projection {
  enum class Kind { kEigenvector, kRandom, kNone };
  Kind kind = Kind::kEigenvector;
  std::uint64_t seed = 0;  // kRandom only

  static Projection eigenvector() { return {Kind::kEigenvector, 0}; }
  static Projection random(std::uint64_t seed) { return {Kind::kRandom, seed}; }
  static Projection none() { return {Kind::kNone, 0}; }
  friend bool operator==(const Projection&, const Projection&) = default;
};

struct AdjustConfig {
  GapMode gap_mode = GapMode::kScaledSubtraction;
  CombineMode combine_mode = CombineMode::kSubtraction;
  // Eigenpairs used; k pairs give k - 1 removal terms, so 1 is identity.
  std::size_t num_eigenpairs = 2;
  Projection projection = Projection::eigenvector();
  friend bool operator==(const AdjustConfig&, const AdjustConfig&) = default;
};

std::string_view to_string(GapMode mode);
std::string_view to_string(CombineMode mode);
GapMode parse_gap_mode(std::string_view name);
CombineMode parse_combine_mode(std::string_view name);

// lambda_n - lambda_{n-1}. Throws UndefinedError with fewer than two values.
double spectral_gap(const SpectralSummary& s);

// (lambda_n - lambda_{n-1}) / lambda_n. Throws UndefinedError when
// lambda_n <= 0 or fewer than two values are present.
double spectral_gap_ratio(const SpectralSummary& s);

// Coefficient of the i-th removal term (i >= 1 pairs lambda_n with
// lambda_{n-i}).
double adjustment_coefficient(const SpectralSummary& s, GapMode mode,
                              std::size_t i);

// Feature adjustment X' from X and the spectrum of the graph Laplacian.
//
// The default configuration computes v = X^T u_{n-1} and returns
// X - (lambda_n - lambda_{n-1}) u_{n-1} v^T. With num_eigenpairs = k the
// removal is summed over pairs i = 1..k-1 using u_{n-i}, each projection
// taken from the original X. Random projection swaps each u for a seeded
// random unit vector; kNone uses X itself in place of u v^T. When every
// coefficient is zero the input is returned unchanged (Concatenation then
// appends a zero block).
//
// Throws DimensionError on shape mismatch and InvalidArgument on
// non-finite input.
FeatureMatrix adjust_features(const FeatureMatrix& x, const SpectralSummary& s,
                              const AdjustConfig& config);

}  // namespace specgap

#endif  // SPECGAP_ADJUST_H_

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

#include "specgap/adjust.h"

#include <cmath>
#include <string>
#include <vector>

#include "specgap/error.h"
#include "specgap/random.h"

namespace specgap {

std::string_view to_string(GapMode mode) {
  switch (mode) {
    case GapMode::kScaledSubtraction:
      return "scaled_subtraction";
    case GapMode::kSimpleSubtraction:
      return "simple_subtraction";
    case GapMode::kRelativeDifference:
      return "relative_difference";
    case GapMode::kNoAdjustment:
      return "none";
  }
  return "unknown";
}

std::string_view to_string(CombineMode mode) {
  switch (mode) {
    case CombineMode::kSubtraction:
      return "subtraction";
    case CombineMode::kMultiplication:
      return "multiplication";
    case CombineMode::kConcatenation:
      return "concatenation";
  }
  return "unknown";
}

GapMode parse_gap_mode(std::string_view name) {
  if (name == "scaled_subtraction") return GapMode::kScaledSubtraction;
  if (name == "simple_subtraction") return GapMode::kSimpleSubtraction;
  if (name == "relative_difference") return GapMode::kRelativeDifference;
  if (name == "none") return GapMode::kNoAdjustment;
  throw ConfigError("unknown gap mode '" + std::string(name) + "'");
}

CombineMode parse_combine_mode(std::string_view name) {
  if (name == "subtraction") return CombineMode::kSubtraction;
  if (name == "multiplication") return CombineMode::kMultiplication;
  if (name == "concatenation") return CombineMode::kConcatenation;
  throw ConfigError("unknown combine mode '" + std::string(name) + "'");
}

double spectral_gap(const SpectralSummary& s) {
  if (s.eigenvalues.size() < 2) {
    throw UndefinedError("spectral gap needs the two largest eigenvalues");
  }
  return s.eigenvalues[0] - s.eigenvalues[1];
}

double spectral_gap_ratio(const SpectralSummary& s) {
  const double gap = spectral_gap(s);
  if (!(s.eigenvalues[0] > 0.0)) {
    throw UndefinedError("spectral gap ratio is undefined for lambda_n <= 0");
  }
  return gap / s.eigenvalues[0];
}

double adjustment_coefficient(const SpectralSummary& s, GapMode mode,
                              std::size_t i) {
  if (i == 0 || i >= s.eigenvalues.size()) {
    throw UndefinedError("adjustment term " + std::to_string(i) +
                         " needs eigenvalue lambda_{n-" + std::to_string(i) +
                         "}");
  }
  const double gap = s.eigenvalues[0] - s.eigenvalues[i];
  switch (mode) {
    case GapMode::kScaledSubtraction:
      return gap;
    case GapMode::kSimpleSubtraction:
      return 1.0;
    case GapMode::kRelativeDifference:
      if (s.eigenvalues[0] > 0.0) return gap / s.eigenvalues[0];
      if (gap == 0.0) return 0.0;
      throw UndefinedError("relative difference needs lambda_n > 0");
    case GapMode::kNoAdjustment:
      return 0.0;
  }
  return 0.0;
}

FeatureMatrix adjust_features(const FeatureMatrix& x, const SpectralSummary& s,
                              const AdjustConfig& config) {
  if (config.num_eigenpairs == 0) {
    throw ConfigError("num_eigenpairs must be at least 1");
  }
  if (!x.allFinite()) throw InvalidArgument("feature matrix is not finite");
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  const std::size_t terms = config.num_eigenpairs - 1;
  if (terms > 0 && s.eigenvalues.size() < config.num_eigenpairs) {
    throw DimensionError("adjustment uses " +
                         std::to_string(config.num_eigenpairs) +
                         " eigenpairs but the spectrum has " +
                         std::to_string(s.eigenvalues.size()));
  }
  const bool needs_vectors =
      terms > 0 && config.projection.kind == Projection::Kind::kEigenvector;
  if (needs_vectors) {
    if (s.eigenvectors.rows() != n ||
        s.eigenvectors.cols() < static_cast<Eigen::Index>(config.num_eigenpairs)) {
      throw DimensionError("feature matrix has " + std::to_string(n) +
                           " rows but eigenvectors have length " +
                           std::to_string(s.eigenvectors.rows()));
    }
    if (!s.eigenvectors.leftCols(static_cast<Eigen::Index>(config.num_eigenpairs))
             .allFinite()) {
      throw InvalidArgument("eigenvectors are not finite");
    }
  }
  for (std::size_t i = 0; i < std::min(config.num_eigenpairs, s.eigenvalues.size());
       ++i) {
    if (!std::isfinite(s.eigenvalues[i])) {
      throw InvalidArgument("eigenvalues are not finite");
    }
  }

  std::vector<double> coeff(terms);
  bool all_zero = true;
  for (std::size_t i = 0; i < terms; ++i) {
    coeff[i] = adjustment_coefficient(s, config.gap_mode, i + 1);
    all_zero = all_zero && coeff[i] == 0.0;
  }

  if (all_zero) {
    if (config.combine_mode != CombineMode::kConcatenation) return x;
    FeatureMatrix out = FeatureMatrix::Zero(n, 2 * d);
    out.leftCols(d) = x;
    return out;
  }

  auto direction = [&](std::size_t i) -> Eigen::VectorXd {
    switch (config.projection.kind) {
      case Projection::Kind::kEigenvector:
        return s.eigenvectors.col(static_cast<Eigen::Index>(i));
      case Projection::Kind::kRandom:
        return random_unit_vector(derive_seed(config.projection.seed, i), n);
      case Projection::Kind::kNone:
        break;
    }
    return {};
  };

  // Sum of c_i u_i (X^T u_i)^T, or sum c_i X without projection.
  FeatureMatrix correction = FeatureMatrix::Zero(n, d);
  // Sum of c_i u_i, used by the row-scaling mode.
  Eigen::VectorXd row_weight = Eigen::VectorXd::Zero(n);
  if (config.projection.kind == Projection::Kind::kNone) {
    double total = 0.0;
    for (double c : coeff) total += c;
    correction = total * x;
    row_weight.setConstant(total);
  } else {
    for (std::size_t i = 0; i < terms; ++i) {
      const Eigen::VectorXd u = direction(i + 1);
      const Eigen::RowVectorXd v = u.transpose() * x;
      correction.noalias() += coeff[i] * u * v;
      row_weight += coeff[i] * u;
    }
  }

  switch (config.combine_mode) {
    case CombineMode::kSubtraction:
      return x - correction;
    case CombineMode::kMultiplication:
      return (Eigen::VectorXd::Ones(n) - row_weight).asDiagonal() * x;
    case CombineMode::kConcatenation: {
      FeatureMatrix out(n, 2 * d);
      out.leftCols(d) = x;
      out.rightCols(d) = correction;
      return out;
    }
  }
  return x;
}

}  // namespace specgap

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
#include <random>

#include <Eigen/QR>
#include <gtest/gtest.h>

#include "specgap/error.h"

namespace specgap {
namespace {

// Spectrum with the given descending values and orthonormal random vectors.
SpectralSummary random_spectrum(std::mt19937_64& rng, Eigen::Index n,
                                std::vector<double> values) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(n, static_cast<Eigen::Index>(values.size()));
  for (auto& v : a.reshaped()) v = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  SpectralSummary s;
  s.eigenvalues = std::move(values);
  s.eigenvectors = qr.householderQ() * Eigen::MatrixXd::Identity(n, a.cols());
  s.converged = true;
  return s;
}

Eigen::MatrixXd random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(r, c);
  for (auto& v : m.reshaped()) v = normal(rng);
  return m;
}

TEST(SpectralGap, Examples) {
  SpectralSummary s;
  s.eigenvalues = {3.0, 1.0};
  EXPECT_EQ(spectral_gap(s), 2.0);
  s.eigenvalues = {4.0, 4.0};
  EXPECT_EQ(spectral_gap(s), 0.0);
  EXPECT_EQ(spectral_gap_ratio(s), 0.0);
  s.eigenvalues = {4.0, 1.0};
  EXPECT_EQ(spectral_gap(s), 3.0);
  EXPECT_EQ(spectral_gap_ratio(s), 0.75);
}

TEST(SpectralGap, Errors) {
  SpectralSummary s;
  s.eigenvalues = {2.0};
  EXPECT_THROW(spectral_gap(s), UndefinedError);
  s.eigenvalues = {0.0, 0.0};
  EXPECT_THROW(spectral_gap_ratio(s), UndefinedError);
}

TEST(AdjustFeatures, WorkedExample) {
  SpectralSummary s;
  s.eigenvalues = {1.5, 1.0};
  s.eigenvectors.resize(2, 2);
  s.eigenvectors << 0, 1, 1, 0;  // u_{n-1} = [1, 0]
  Eigen::MatrixXd x(2, 2);
  x << 1, 2, 3, 4;
  Eigen::MatrixXd want(2, 2);
  want << 0.5, 1, 3, 4;
  EXPECT_LE((adjust_features(x, s, AdjustConfig{}) - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(AdjustFeatures, ZeroGapAndSinglePairAreBitIdentities) {
  std::mt19937_64 rng(1);
  const Eigen::MatrixXd x = random_matrix(rng, 7, 3);
  const SpectralSummary flat = random_spectrum(rng, 7, {2.0, 2.0, 1.0});
  for (auto combine : {CombineMode::kSubtraction, CombineMode::kMultiplication}) {
    AdjustConfig cfg;
    cfg.combine_mode = combine;
    EXPECT_EQ(adjust_features(x, flat, cfg), x);
  }
  const SpectralSummary s = random_spectrum(rng, 7, {3.0, 1.0});
  AdjustConfig single;
  single.num_eigenpairs = 1;
  EXPECT_EQ(adjust_features(x, s, single), x);
  AdjustConfig none;
  none.gap_mode = GapMode::kNoAdjustment;
  EXPECT_EQ(adjust_features(x, s, none), x);
}

TEST(AdjustFeatures, FeaturesOrthogonalToEigenvectorUnchanged) {
  std::mt19937_64 rng(2);
  const SpectralSummary s = random_spectrum(rng, 6, {5.0, 2.0});
  const Eigen::VectorXd u = s.eigenvectors.col(1);
  Eigen::MatrixXd x = random_matrix(rng, 6, 4);
  x -= u * (u.transpose() * x);  // now X^T u = 0
  EXPECT_LE((adjust_features(x, s, AdjustConfig{}) - x).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(AdjustFeatures, RowsWhereEigenvectorVanishesUnchanged) {
  SpectralSummary s;
  s.eigenvalues = {4.0, 1.0};
  s.eigenvectors = Eigen::MatrixXd::Zero(4, 2);
  s.eigenvectors(0, 0) = 1.0;
  s.eigenvectors(1, 1) = std::sqrt(0.5);
  s.eigenvectors(2, 1) = -std::sqrt(0.5);
  std::mt19937_64 rng(3);
  const Eigen::MatrixXd x = random_matrix(rng, 4, 3);
  const Eigen::MatrixXd y = adjust_features(x, s, AdjustConfig{});
  EXPECT_LE((y.row(0) - x.row(0)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((y.row(3) - x.row(3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(AdjustFeaturesProperty, ProjectionIdentity) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> uni(0.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index n = 2 + trial % 30, d = 1 + trial % 7;
    const double l2 = uni(rng), l1 = l2 + uni(rng);
    const SpectralSummary s = random_spectrum(rng, n, {l1, l2});
    const Eigen::MatrixXd x = random_matrix(rng, n, d);
    const Eigen::VectorXd u = s.eigenvectors.col(1);
    const Eigen::RowVectorXd lhs = u.transpose() * adjust_features(x, s, AdjustConfig{});
    const Eigen::RowVectorXd rhs = (1.0 - (l1 - l2)) * (u.transpose() * x);
    EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(AdjustFeaturesProperty, Linearity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SpectralSummary s = random_spectrum(rng, 9, {6.0, 3.0, 2.5});
    const Eigen::MatrixXd a = random_matrix(rng, 9, 4), b = random_matrix(rng, 9, 4);
    for (auto combine : {CombineMode::kSubtraction, CombineMode::kMultiplication}) {
      AdjustConfig cfg;
      cfg.combine_mode = combine;
      cfg.num_eigenpairs = 2 + trial % 2;
      const Eigen::MatrixXd lhs = adjust_features(2.0 * a - 0.5 * b, s, cfg);
      const Eigen::MatrixXd rhs = 2.0 * adjust_features(a, s, cfg) - 0.5 * adjust_features(b, s, cfg);
      EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(AdjustFeatures, GapModeCoefficients) {
  SpectralSummary s;
  s.eigenvalues = {4.0, 1.0};
  EXPECT_EQ(adjustment_coefficient(s, GapMode::kScaledSubtraction, 1), 3.0);
  EXPECT_EQ(adjustment_coefficient(s, GapMode::kSimpleSubtraction, 1), 1.0);
  EXPECT_EQ(adjustment_coefficient(s, GapMode::kRelativeDifference, 1), 0.75);
  EXPECT_EQ(adjustment_coefficient(s, GapMode::kNoAdjustment, 1), 0.0);
}

TEST(AdjustFeatures, MultiPairMatchesOuterProductSum) {
  std::mt19937_64 rng(6);
  const SpectralSummary s = random_spectrum(rng, 10, {7.0, 5.0, 4.0, 1.0});
  const Eigen::MatrixXd x = random_matrix(rng, 10, 3);
  AdjustConfig cfg;
  cfg.num_eigenpairs = 4;
  Eigen::MatrixXd want = x;
  for (int i = 1; i < 4; ++i) {
    const Eigen::VectorXd u = s.eigenvectors.col(i);
    want -= (s.eigenvalues[0] - s.eigenvalues[i]) * u * (x.transpose() * u).transpose();
  }
  EXPECT_LE((adjust_features(x, s, cfg) - want).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(AdjustFeatures, MultiplicationIsRowScaling) {
  std::mt19937_64 rng(7);
  const SpectralSummary s = random_spectrum(rng, 5, {3.0, 2.0});
  const Eigen::MatrixXd x = random_matrix(rng, 5, 2);
  AdjustConfig cfg;
  cfg.combine_mode = CombineMode::kMultiplication;
  const Eigen::MatrixXd y = adjust_features(x, s, cfg);
  for (Eigen::Index i = 0; i < 5; ++i) {
    const double f = 1.0 - 1.0 * s.eigenvectors(i, 1);
    EXPECT_NEAR(y(i, 0), f * x(i, 0), 1e-14);
    EXPECT_NEAR(y(i, 1), f * x(i, 1), 1e-14);
  }
}

TEST(AdjustFeatures, ConcatenationWidensAndKeepsInput) {
  std::mt19937_64 rng(8);
  const SpectralSummary s = random_spectrum(rng, 6, {3.0, 1.0});
  const Eigen::MatrixXd x = random_matrix(rng, 6, 4);
  AdjustConfig cfg;
  cfg.combine_mode = CombineMode::kConcatenation;
  const Eigen::MatrixXd y = adjust_features(x, s, cfg);
  ASSERT_EQ(y.cols(), 8);
  EXPECT_EQ(Eigen::MatrixXd(y.leftCols(4)), x);
  const Eigen::VectorXd u = s.eigenvectors.col(1);
  EXPECT_LE((y.rightCols(4) - 2.0 * u * (u.transpose() * x)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(AdjustFeatures, ProjectionVariants) {
  std::mt19937_64 rng(9);
  const SpectralSummary s = random_spectrum(rng, 6, {3.0, 2.5});
  const Eigen::MatrixXd x = random_matrix(rng, 6, 3);
  AdjustConfig none;
  none.projection = Projection::none();
  EXPECT_LE((adjust_features(x, s, none) - 0.5 * x).cwiseAbs().maxCoeff(), 1e-15);
  AdjustConfig rnd;
  rnd.projection = Projection::random(42);
  const Eigen::MatrixXd a = adjust_features(x, s, rnd);
  EXPECT_EQ(a, adjust_features(x, s, rnd));
  EXPECT_GT((a - adjust_features(x, s, AdjustConfig{})).norm(), 1e-6);
  rnd.projection = Projection::random(43);
  EXPECT_GT((a - adjust_features(x, s, rnd)).norm(), 1e-6);
}

TEST(AdjustFeatures, Errors) {
  std::mt19937_64 rng(10);
  const SpectralSummary s = random_spectrum(rng, 4, {3.0, 1.0});
  EXPECT_THROW(adjust_features(Eigen::MatrixXd::Ones(5, 2), s, AdjustConfig{}), DimensionError);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(4, 2);
  bad(1, 1) = std::nan("");
  EXPECT_THROW(adjust_features(bad, s, AdjustConfig{}), InvalidArgument);
  AdjustConfig three;
  three.num_eigenpairs = 3;
  EXPECT_THROW(adjust_features(Eigen::MatrixXd::Ones(4, 2), s, three), DimensionError);
}

TEST(AdjustFeatures, EnumNamesRoundTrip) {
  for (auto m : {GapMode::kScaledSubtraction, GapMode::kSimpleSubtraction,
                 GapMode::kRelativeDifference, GapMode::kNoAdjustment}) {
    EXPECT_EQ(parse_gap_mode(to_string(m)), m);
  }
  for (auto m : {CombineMode::kSubtraction, CombineMode::kMultiplication,
                 CombineMode::kConcatenation}) {
    EXPECT_EQ(parse_combine_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_gap_mode("half"), ConfigError);
}

}  // namespace
}  // namespace specgap

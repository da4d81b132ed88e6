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

#include "specgap/metrics.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "specgap/error.h"

namespace specgap {
namespace {

std::vector<ScoredSample> make(const std::vector<double>& id, const std::vector<double>& ood) {
  std::vector<ScoredSample> s;
  for (double v : id) s.push_back({v, DistLabel::kID, s.size()});
  for (double v : ood) s.push_back({v, DistLabel::kOOD, s.size()});
  return s;
}

// Random instance; `levels` > 0 rounds scores onto few values to force ties.
std::vector<ScoredSample> random_instance(std::mt19937_64& rng, int levels) {
  std::uniform_int_distribution<int> size(2, 200);
  std::normal_distribution<double> normal;
  const int n = size(rng);
  std::vector<ScoredSample> s;
  for (int i = 0; i < n; ++i) {
    const bool ood = i == 0 ? true : (i == 1 ? false : (rng() & 1));
    double v = normal(rng) + (ood ? 0.7 : 0.0);
    if (levels > 0) v = std::round(v * levels / 3.0);
    s.push_back({v, ood ? DistLabel::kOOD : DistLabel::kID, static_cast<std::size_t>(i)});
  }
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

TEST(Metrics, PerfectSeparation) {
  const auto s = make({0.1, 0.1, 0.1}, {0.9, 0.9});
  EXPECT_EQ(auc(s), 1.0);
  EXPECT_EQ(aupr(s), 1.0);
  EXPECT_EQ(fpr_at_95tpr(s), 0.0);
}

TEST(Metrics, AllTied) {
  const auto s = make({0.5, 0.5}, {0.5, 0.5});
  EXPECT_EQ(auc(s), 0.5);
  EXPECT_EQ(aupr(s), 0.5);
  EXPECT_EQ(fpr_at_95tpr(s), 1.0);
}

TEST(Metrics, SingleClassAndNonFiniteRejected) {
  EXPECT_THROW(auc(make({1, 2}, {})), UndefinedError);
  EXPECT_THROW(aupr(make({}, {1})), UndefinedError);
  EXPECT_THROW(fpr_at_95tpr(make({1}, {})), UndefinedError);
  EXPECT_THROW(auc(make({1, NAN}, {2})), InvalidArgument);
}

TEST(MetricsProperty, MatchBruteForceOracles) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = random_instance(rng, trial % 3 == 0 ? 0 : 1 + trial % 4);
    EXPECT_NEAR(auc(s), oracle::auc(s), 1e-12);
    EXPECT_NEAR(aupr(s), oracle::aupr(s), 1e-12);
    EXPECT_NEAR(fpr_at_95tpr(s), oracle::fpr95(s), 1e-12);
  }
}

TEST(MetricsProperty, NegationMirrorsAucWithoutTies) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_instance(rng, 0);
    const double a = auc(s);
    for (auto& x : s) x.score = -x.score;
    EXPECT_NEAR(auc(s), 1.0 - a, 1e-12);
  }
}

TEST(MetricsProperty, MonotoneTransformInvariance) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_instance(rng, trial % 2);
    const Metrics m = evaluate(s);
    for (auto& x : s) x.score = std::exp(x.score / 4.0) + 3.0;
    const Metrics t = evaluate(s);
    EXPECT_EQ(m.auc, t.auc);
    EXPECT_EQ(m.aupr, t.aupr);
    EXPECT_EQ(m.fpr95, t.fpr95);
  }
}

TEST(MetricsProperty, FprBoundsAndExtremeOodNeverHurts) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_instance(rng, trial % 3);
    const double f = fpr_at_95tpr(s);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    double top = s[0].score;
    for (const auto& x : s) top = std::max(top, x.score);
    s.push_back({top + 1.0, DistLabel::kOOD, 9999});
    EXPECT_LE(fpr_at_95tpr(s), f);
  }
}

TEST(Metrics, EvaluateCountsClasses) {
  const Metrics m = evaluate(make({1, 2, 3}, {4, 5}));
  EXPECT_EQ(m.num_id, 3u);
  EXPECT_EQ(m.num_ood, 2u);
  EXPECT_GE(m.auc, 0.0);
  EXPECT_LE(m.aupr, 1.0);
}

}  // namespace
}  // namespace specgap

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

#include "specgap/synth.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "specgap/error.h"

namespace specgap {
namespace {

GraphModel er(std::size_t n, double p) { return GraphModel{ErdosRenyi{n, p}}; }

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

TEST(Generate, ErdosRenyiExtremes) {
  const GraphCollection full = generate({er(10, 1.0), 5, 1});
  ASSERT_EQ(full.size(), 5u);
  for (const Graph& g : full.graphs) EXPECT_EQ(g.num_edges(), 45u);
  for (const Graph& g : generate({er(10, 0.0), 5, 1}).graphs) EXPECT_EQ(g.num_edges(), 0u);
}

TEST(Generate, ErdosRenyiMeanEdgeCount) {
  const GraphCollection c = generate({er(50, 0.3), 500, 2024});
  double sum = 0.0;
  for (const Graph& g : c.graphs) sum += static_cast<double>(g.num_edges());
  const double mean = sum / 500.0;
  const double sigma = std::sqrt(1225.0 * 0.3 * 0.7 / 500.0);
  EXPECT_NEAR(mean, 367.5, 3.0 * sigma);
}

TEST(Generate, DeterministicPerSeedAndIndex) {
  const EnsembleSpec spec{GraphModel{StochasticBlock{{6, 7}, 0.6, 0.1}}, 20, 9};
  const GraphCollection a = generate(spec), b = generate(spec);
  EXPECT_EQ(a.graphs, b.graphs);
  EnsembleSpec other = spec;
  other.seed = 10;
  EXPECT_NE(generate(other).graphs, a.graphs);
  // Growing the ensemble keeps the existing members.
  EnsembleSpec bigger = spec;
  bigger.count = 30;
  const GraphCollection c = generate(bigger);
  EXPECT_TRUE(std::equal(a.graphs.begin(), a.graphs.end(), c.graphs.begin()));
}

TEST(Generate, BlockModelExtremesGiveDisjointCliques) {
  const GraphCollection c = generate({GraphModel{StochasticBlock{{3, 4}, 1.0, 0.0}}, 3, 0});
  for (const Graph& g : c.graphs) {
    EXPECT_EQ(g.num_edges(), 3u + 6u);
    EXPECT_EQ(sorted_degrees(g), (std::vector<std::size_t>{2, 2, 2, 3, 3, 3, 3}));
  }
}

TEST(Generate, RegularDegreesExact) {
  for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{
           {10, 3}, {20, 4}, {9, 8}, {12, 9}, {30, 1}, {7, 0}, {50, 6}}) {
    const GraphCollection c = generate({GraphModel{RandomRegular{n, d}}, 10, n * 31 + d});
    for (const Graph& g : c.graphs) {
      EXPECT_EQ(g.num_nodes(), n);
      for (NodeId v = 0; v < n; ++v) EXPECT_EQ(g.degree(v), d) << n << "," << d;
    }
  }
}

TEST(Generate, InfeasibleParametersRejected) {
  EXPECT_THROW(generate({GraphModel{RandomRegular{5, 3}}, 1, 0}), InvalidArgument);
  EXPECT_THROW(generate({GraphModel{RandomRegular{4, 4}}, 1, 0}), InvalidArgument);
  EXPECT_THROW(generate({er(5, 1.5), 1, 0}), InvalidArgument);
  EXPECT_THROW(generate({rewired(er(5, 0.5), -0.1), 1, 0}), InvalidArgument);
  EXPECT_THROW(generate({GraphModel{StochasticBlock{{}, 0.5, 0.5}}, 1, 0}), InvalidArgument);
}

TEST(Generate, RewiringPreservesDegreesAndChangesEdges) {
  const GraphModel base = er(30, 0.3);
  const GraphCollection orig = generate({base, 20, 5});
  const GraphCollection rew = generate({rewired(base, 0.4), 20, 5});
  std::size_t changed = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    // Same seed, so the base draw is the same graph before rewiring.
    EXPECT_EQ(rew.graphs[i].degrees(), orig.graphs[i].degrees());
    EXPECT_EQ(rew.graphs[i].num_edges(), orig.graphs[i].num_edges());
    changed += rew.graphs[i].edges() != orig.graphs[i].edges();
  }
  EXPECT_EQ(changed, 20u);
  const GraphCollection none = generate({rewired(base, 0.0), 20, 5});
  EXPECT_EQ(none.graphs, orig.graphs);
}

TEST(Generate, DescribeModels) {
  EXPECT_EQ(describe(rewired(er(30, 0.5), 0.4)), "rewired(er(30,0.5),0.4)");
  EXPECT_EQ(describe(GraphModel{StochasticBlock{{3, 4}, 0.5, 0.1}}), "sbm([3,4],0.5,0.1)");
}

TEST(GapDistribution, CompleteGraphsHaveZeroGap) {
  const GapDistributionReport r =
      gap_distribution(generate({er(4, 1.0), 10, 0}), LaplacianVariant::kUnnormalized);
  for (double g : r.gaps) EXPECT_EQ(g, 0.0);
  EXPECT_EQ(r.variance, 0.0);
  EXPECT_EQ(r.histogram.counts, std::vector<std::size_t>{10});
}

TEST(GapDistribution, StarsHaveGapThree) {
  GraphCollection c;
  for (int i = 0; i < 6; ++i) c.graphs.push_back(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  const GapDistributionReport r = gap_distribution(c, LaplacianVariant::kUnnormalized);
  for (double g : r.gaps) EXPECT_NEAR(g, 3.0, 1e-9);
  for (double q : r.ratios) EXPECT_NEAR(q, 0.75, 1e-9);
}

TEST(GapDistribution, InvariantsOnMixedEnsemble) {
  for (auto variant : {LaplacianVariant::kUnnormalized, LaplacianVariant::kNormalized,
                       LaplacianVariant::kSignless}) {
    GapDistributionOptions opt;
    opt.bins = 7;
    const GapDistributionReport r =
        gap_distribution(generate({er(25, 0.2), 80, 3}), variant, opt);
    ASSERT_EQ(r.gaps.size(), 80u);
    EXPECT_EQ(std::accumulate(r.histogram.counts.begin(), r.histogram.counts.end(), 0u), 80u);
    EXPECT_EQ(r.histogram.edges.size(), 8u);
    for (std::size_t i = 0; i < 80; ++i) {
      EXPECT_GE(r.gaps[i], 0.0);
      if (!std::isnan(r.ratios[i])) {
        EXPECT_GE(r.ratios[i], 0.0);
        EXPECT_LE(r.ratios[i], 1.0);
      }
    }
  }
}

TEST(GapDistribution, ThreadCountDoesNotChangeResult) {
  const GraphCollection c = generate({er(30, 0.3), 40, 8});
  GapDistributionOptions one, four;
  four.threads = 4;
  const auto a = gap_distribution(c, LaplacianVariant::kNormalized, one);
  const auto b = gap_distribution(c, LaplacianVariant::kNormalized, four);
  EXPECT_EQ(a.gaps, b.gaps);
  EXPECT_EQ(a.mean, b.mean);
}

// Under D - A the two densities give nearly equal mean gaps; D + A
// separates them.
TEST(GapDistribution, DensityShiftsTheMean) {
  const auto dense = gap_distribution(generate({er(50, 0.3), 200, 1}), LaplacianVariant::kSignless);
  const auto sparse = gap_distribution(generate({er(50, 0.15), 200, 2}), LaplacianVariant::kSignless);
  const double z = (dense.mean - sparse.mean) /
                   std::sqrt(dense.variance / 200.0 + sparse.variance / 200.0);
  EXPECT_GT(std::abs(z), 2.0);
}

TEST(GapDistribution, TinyGraphReportsItsId) {
  GraphCollection c;
  c.graphs = {build_graph(3, {{0, 1}}), build_graph(1, {})};
  c.graph_ids = {10, 11};
  try {
    gap_distribution(c, LaplacianVariant::kUnnormalized);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("graph 11"), std::string::npos) << e.what();
  }
}

TEST(Histogram, EdgesAndCounts) {
  const Histogram h = make_histogram({0, 1, 2, 3, 4}, 4);
  EXPECT_EQ(h.edges, (std::vector<double>{0, 1, 2, 3, 4}));
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{1, 1, 1, 2}));
}

TEST(CheckD1, DisjointSupports) {
  const D1Check c = check_d1(std::vector<double>{5, 6, 7}, std::vector<double>{1, 2}, 0.2);
  EXPECT_TRUE(c.satisfied);
  EXPECT_EQ(c.epsilon_hat, 0.2);
  EXPECT_EQ(c.orientation, GapOrientation::kGapHighMeansID);
  EXPECT_GT(c.tau, 2.0);
  EXPECT_LT(c.tau, 5.0);
}

TEST(CheckD1, IdenticalSamplesFail) {
  const std::vector<double> v = {1, 2, 3, 4, 5, 6};
  for (double alpha : {0.1, 0.3, 0.45}) EXPECT_FALSE(check_d1(v, v, alpha).satisfied);
}

TEST(CheckD1, DenseVersusSparseEnsembles) {
  const auto dense = gap_distribution(generate({er(50, 0.3), 200, 1}), LaplacianVariant::kSignless);
  const auto sparse = gap_distribution(generate({er(50, 0.15), 200, 2}), LaplacianVariant::kSignless);
  const D1Check c = check_d1(dense, sparse, 0.2);
  EXPECT_TRUE(c.satisfied);
  EXPECT_GT(c.epsilon_hat, 0.0);
  EXPECT_EQ(c.orientation, GapOrientation::kGapHighMeansID);
}

TEST(CheckD1, AlphaRangeChecked) {
  const std::vector<double> v = {1};
  EXPECT_THROW(check_d1(v, v, 0.5), InvalidArgument);
  EXPECT_THROW(check_d1(v, v, 0.0), InvalidArgument);
}

TEST(SeparationGain, IdenticalSpecsGiveExactlyZero) {
  const EnsembleSpec spec{er(20, 0.4), 100, 3};
  GainOptions opt;
  opt.num_pairs = 100;
  opt.bootstrap_resamples = 200;
  const GainReport r = separation_gain_experiment(spec, spec, EmbedConfig{}, AdjustConfig{}, opt);
  EXPECT_EQ(r.gamma_hat, 0.0);
  EXPECT_LE(r.ci95_low, 0.0);
  EXPECT_GE(r.ci95_high, 0.0);
  EXPECT_EQ(r.num_pairs, 100u);
}

TEST(SeparationGain, CompleteGraphsHaveNoGain) {
  GainOptions opt;
  opt.num_pairs = 100;
  opt.bootstrap_resamples = 100;
  const GainReport r = separation_gain_experiment({er(10, 1.0), 1, 0}, {er(13, 1.0), 1, 0},
                                                  EmbedConfig{}, AdjustConfig{}, opt);
  EXPECT_EQ(r.gamma_hat, 0.0);
  EXPECT_GT(r.mean_sep_raw, 0.0);
  EXPECT_EQ(r.ci95_halfwidth, 0.0);
}

TEST(SeparationGain, DeterministicAndThreadIndependent) {
  GainOptions opt;
  opt.num_pairs = 100;
  opt.bootstrap_resamples = 100;
  const EnsembleSpec id{er(20, 0.5), 0, 1}, ood{rewired(er(20, 0.5), 0.4), 0, 1};
  const GainReport a = separation_gain_experiment(id, ood, EmbedConfig{}, AdjustConfig{}, opt);
  opt.threads = 3;
  const GainReport b = separation_gain_experiment(id, ood, EmbedConfig{}, AdjustConfig{}, opt);
  EXPECT_EQ(a.pair_gains, b.pair_gains);
  EXPECT_EQ(a.ci95_low, b.ci95_low);
  EXPECT_GE(a.ci95_halfwidth, 0.0);
}

}  // namespace
}  // namespace specgap

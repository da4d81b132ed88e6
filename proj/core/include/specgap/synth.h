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

#ifndef SPECGAP_SYNTH_H_
#define SPECGAP_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specgap/adjust.h"
#include "specgap/collection.h"
#include "specgap/embed.h"
#include "specgap/gap_detector.h"
#include "specgap/lanczos.h"
#include "specgap/laplacian.h"

namespace specgap {

struct ErdosRenyi {
  std::size_t n = 0;
  double p = 0.0;
  friend bool operator==(const ErdosRenyi&, const ErdosRenyi&) = default;
};

// Consecutive node blocks; p_in within a block, p_out across blocks.
struct StochasticBlock {
  std::vector<std::size_t> block_sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  friend bool operator==(const StochasticBlock&, const StochasticBlock&) = default;
};

struct RandomRegular {
  std::size_t n = 0;
  std::size_t d = 0;
  friend bool operator==(const RandomRegular&, const RandomRegular&) = default;
};

struct GraphModel;

// Base sample followed by round(rewire_fraction * m) degree-preserving
// double-edge swaps.
struct Rewired {
  std::shared_ptr<const GraphModel> base;
  double rewire_fraction = 0.0;
  friend bool operator==(const Rewired& a, const Rewired& b);
};

struct GraphModel {
  std::variant<ErdosRenyi, StochasticBlock, RandomRegular, Rewired> kind;
  friend bool operator==(const GraphModel&, const GraphModel&) = default;
};

inline bool operator==(const Rewired& a, const Rewired& b) {
  if (a.rewire_fraction != b.rewire_fraction) return false;
  if (!a.base || !b.base) return a.base == b.base;
  return *a.base == *b.base;
}

GraphModel rewired(GraphModel base, double rewire_fraction);

// Ensemble of `count` graphs. Graph i is sampled with seed
// derive_seed(seed, i), so ensembles are reproducible and prefix-stable.
struct EnsembleSpec {
  GraphModel model;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;
};

// Throws InvalidArgument for probabilities outside [0, 1], odd n * d or
// d >= n for regular graphs, and rewire fractions outside [0, 1].
void validate(const GraphModel& model);
std::string describe(const GraphModel& model);

Graph sample_graph(const GraphModel& model, std::uint64_t seed);
GraphCollection generate(const EnsembleSpec& spec);

struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::size_t> counts;
};

struct GapDistributionReport {
  std::string label;
  LaplacianVariant variant = LaplacianVariant::kUnnormalized;
  std::vector<double> gaps;
  // NaN where lambda_n <= 0 (ratio undefined).
  std::vector<double> ratios;
  std::vector<double> lambda_max;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single graph
  double ratio_mean = 0.0;  // over defined ratios
  Histogram histogram;
  std::size_t unconverged = 0;
};

struct GapDistributionOptions {
  LanczosConfig lanczos;
  std::size_t bins = 20;
  std::size_t threads = 1;
};

// Top-2 Lanczos per graph (seed derive_seed(lanczos.seed, i)).
// Throws InvalidArgument naming the graph when one has fewer than 2 nodes;
// solver errors are rethrown with the graph id attached.
GapDistributionReport gap_distribution(const GraphCollection& collection,
                                       LaplacianVariant variant,
                                       const GapDistributionOptions& options = {});

Histogram make_histogram(const std::vector<double>& values, std::size_t bins);

struct D1Check {
  double tau = 0.0;
  GapOrientation orientation = GapOrientation::kGapHighMeansID;
  double epsilon_hat = 0.0;
  bool satisfied = false;
};

// Finds tau (and the orientation) maximizing
//   eps = alpha - max(P_ID[gap on the OOD side of tau], P_OOD[gap on the ID side])
// with inclusive tails. Throws InvalidArgument unless alpha is in (0, 1/2)
// and both samples are non-empty.
D1Check check_d1(const std::vector<double>& id_gaps,
                 const std::vector<double>& ood_gaps, double alpha);
D1Check check_d1(const GapDistributionReport& id_report,
                 const GapDistributionReport& ood_report, double alpha);

struct GainReport {
  double mean_sep_adjusted = 0.0;
  double mean_sep_raw = 0.0;
  double gamma_hat = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  double ci95_halfwidth = 0.0;
  std::size_t num_pairs = 0;
  std::size_t bootstrap_resamples = 0;
  // Per-pair ||R'_ID - R'_OOD||_F - ||R_ID - R_OOD||_F.
  std::vector<double> pair_gains;
};

struct GainOptions {
  LaplacianVariant variant = LaplacianVariant::kUnnormalized;
  LanczosConfig lanczos;
  std::size_t num_pairs = 500;
  std::size_t bootstrap_resamples = 1000;
  std::uint64_t bootstrap_seed = 0;
  std::size_t threads = 1;
};

// Pairs graph i of each ensemble (both generated with count = num_pairs).
// Each graph is represented by the stacked per-layer pooled features of the
// embedder (num_layers x hidden_dim), computed once with the adjustment at
// embed_config.adjust_position and once without. The gain estimate is the
// mean per-pair difference of Frobenius distances with a percentile
// bootstrap interval. Throws DimensionError when concatenation changes the
// representation width and InvalidArgument when num_pairs is 0 or the
// adjust position is None.
GainReport separation_gain_experiment(const EnsembleSpec& id_spec,
                                      const EnsembleSpec& ood_spec,
                                      const EmbedConfig& embed_config,
                                      const AdjustConfig& adjust_config,
                                      const GainOptions& options = {});

}  // namespace specgap

#endif  // SPECGAP_SYNTH_H_

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

#ifndef SPECGAP_EXPERIMENT_H_
#define SPECGAP_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "specgap/adjust.h"
#include "specgap/collection.h"
#include "specgap/embed.h"
#include "specgap/gap_detector.h"
#include "specgap/lanczos.h"
#include "specgap/laplacian.h"
#include "specgap/metrics.h"
#include "specgap/synth.h"

namespace specgap {

// ID and OOD graphs read from two TU directories.
struct TuSource {
  std::filesystem::path id_dir;
  std::string id_name;
  std::filesystem::path ood_dir;
  std::string ood_name;
  friend bool operator==(const TuSource&, const TuSource&) = default;
};

// ID and OOD ensembles drawn from generators. Ensemble seeds come from the
// experiment's master seed.
struct EnsembleSource {
  GraphModel id_model;
  GraphModel ood_model;
  std::size_t id_count = 200;
  std::size_t ood_count = 200;
  friend bool operator==(const EnsembleSource&, const EnsembleSource&) = default;
};

using DatasetSource = std::variant<TuSource, EnsembleSource>;

struct ScorerConfig {
  enum class Kind { kSSD, kLOF, kGapThreshold };
  Kind kind = Kind::kSSD;
  std::size_t lof_k = 20;
  friend bool operator==(const ScorerConfig&, const ScorerConfig&) = default;
};

std::string_view to_string(ScorerConfig::Kind kind);
ScorerConfig::Kind parse_scorer_kind(std::string_view name);

struct ExperimentConfig {
  std::string name = "experiment";
  DatasetSource dataset = EnsembleSource{};
  LaplacianVariant variant = LaplacianVariant::kUnnormalized;
  // k is taken from adjust.num_eigenpairs (at least 2); seed from master_seed.
  LanczosConfig lanczos;
  AdjustConfig adjust;
  // weight_seed is taken from master_seed. An unset feature init means node
  // attributes when every graph has them and degree scalars otherwise.
  EmbedConfig embed;
  bool auto_features = true;
  ScorerConfig scorer;
  std::uint64_t master_seed = 0;
  std::size_t threads = 1;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Throws ConfigError naming the first invalid field.
void validate(const ExperimentConfig& config);

struct StageTiming {
  std::string stage;
  double ms = 0.0;
  friend bool operator==(const StageTiming&, const StageTiming&) = default;
};

struct EvalReport {
  std::string name;
  std::string method;  // e.g. "ssd+scaled_subtraction"
  Metrics metrics;
  // Gap-threshold scorer only: threshold and orientation picked on val.
  std::optional<TauChoice> tau;
  // Contiguous laps: ingest, split, spectrum, adjust, embed, score,
  // metrics. Their sum equals total_ms.
  std::vector<StageTiming> runtime_ms;
  double total_ms = 0.0;
  // Test-split scores in collection order.
  std::vector<ScoredSample> scores;
};

bool operator==(const TauChoice& a, const TauChoice& b);
bool operator==(const EvalReport& a, const EvalReport& b);

// ingest -> split -> spectrum -> adjust -> embed -> score -> metrics.
// Detectors are fit on the train split (gap threshold: on val) and
// evaluated on test. Deterministic for a fixed config, including
// `threads`. Stage failures are rethrown as StageError. With an
// after-layer-0 position the adjustment is its own stage; at later
// positions its cost is part of embed.
EvalReport run_experiment(const ExperimentConfig& config);

// Compact generator syntax for the CLI:
//   er:N:P   sbm:S1,S2,...:P_IN:P_OUT   regular:N:D   rewired:F:<model>
GraphModel parse_model_spec(std::string_view spec);

// "none", "output", "after_layer:L".
AdjustPosition parse_adjust_position(std::string_view text);
std::string to_string(const AdjustPosition& position);
// "degree_scalar", "degree_onehot:D", "constant", "attributes".
FeatureInit parse_feature_init(std::string_view text);
std::string to_string(const FeatureInit& init);
// "eigenvector", "random:SEED", "none".
Projection parse_projection(std::string_view text);
std::string to_string(const Projection& projection);

}  // namespace specgap

#endif  // SPECGAP_EXPERIMENT_H_

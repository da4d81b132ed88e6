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

#ifndef SPECGAP_EMBED_H_
#define SPECGAP_EMBED_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "specgap/adjust.h"
#include "specgap/graph.h"
#include "specgap/lanczos.h"

namespace specgap {

enum class Activation { kReLU, kIdentity };
enum class Readout { kMeanPool, kSumPool };

// Where the feature adjustment is inserted. AfterLayer(0) acts on the
// initial node features; Output is AfterLayer(num_layers).
struct AdjustPosition {
  enum class Kind { kNone, kAfterLayer, kOutput };
  Kind kind = Kind::kAfterLayer;
  std::size_t layer = 0;

  static AdjustPosition none() { return {Kind::kNone, 0}; }
  static AdjustPosition after_layer(std::size_t l) { return {Kind::kAfterLayer, l}; }
  static AdjustPosition output() { return {Kind::kOutput, 0}; }
  friend bool operator==(const AdjustPosition&, const AdjustPosition&) = default;
};

struct FeatureInit {
  enum class Kind { kDegreeScalar, kDegreeOneHot, kConstantOne, kNodeAttributes };
  Kind kind = Kind::kDegreeScalar;
  std::size_t max_degree = 0;  // kDegreeOneHot: columns 0..max_degree

  static FeatureInit degree_scalar() { return {Kind::kDegreeScalar, 0}; }
  static FeatureInit degree_one_hot(std::size_t max_degree) {
    return {Kind::kDegreeOneHot, max_degree};
  }
  static FeatureInit constant_one() { return {Kind::kConstantOne, 0}; }
  static FeatureInit node_attributes() { return {Kind::kNodeAttributes, 0}; }
  friend bool operator==(const FeatureInit&, const FeatureInit&) = default;
};

struct EmbedConfig {
  std::size_t num_layers = 3;
  std::size_t hidden_dim = 32;
  std::uint64_t weight_seed = 0;
  Activation activation = Activation::kReLU;
  Readout readout = Readout::kMeanPool;
  AdjustPosition adjust_position = AdjustPosition::after_layer(0);
  FeatureInit feature_init = FeatureInit::degree_scalar();
  friend bool operator==(const EmbedConfig&, const EmbedConfig&) = default;
};

struct GraphEmbedding {
  Eigen::VectorXd vector;
  std::size_t source_graph_id = 0;
};

std::string_view to_string(Activation a);
std::string_view to_string(Readout r);
Activation parse_activation(std::string_view name);
Readout parse_readout(std::string_view name);

// Deterministic X_0. DegreeOneHot clamps degrees above max_degree into the
// last column. Throws InvalidArgument for NodeAttributes on a graph that
// carries none.
FeatureMatrix init_node_features(const Graph& graph, const FeatureInit& init);

// Column count init_node_features produces for `graph`.
std::size_t feature_width(const Graph& graph, const FeatureInit& init);

// Fixed random-weight message-passing network:
//   h^{l+1} = act(A_hat h^l W_l),  A_hat = row-normalized (A + I),
// with W_l ~ U[-s, s], s = sqrt(6 / (fan_in + fan_out)), drawn once from
// weight_seed. Immutable after construction; embed() is reentrant.
class Embedder {
 public:
  Embedder(EmbedConfig config, std::size_t input_dim,
           std::optional<AdjustConfig> adjust = std::nullopt);

  const EmbedConfig& config() const { return config_; }
  std::size_t input_dim() const { return input_dim_; }
  std::size_t output_dim() const { return output_dim_; }
  const std::vector<Eigen::MatrixXd>& weights() const { return weights_; }

  // `spectrum` must be non-null whenever an adjustment position is set.
  GraphEmbedding embed(const Graph& graph, const SpectralSummary* spectrum,
                       std::size_t graph_id = 0) const;
  GraphEmbedding embed(const Graph& graph, const FeatureMatrix& x0,
                       const SpectralSummary* spectrum,
                       std::size_t graph_id = 0) const;

  // Node features of every layer h^0..h^L, with the adjustment applied at
  // its position (entry l is the adjusted matrix when adjusted after l).
  std::vector<FeatureMatrix> forward(const Graph& graph,
                                     const FeatureMatrix& x0,
                                     const SpectralSummary* spectrum) const;

  // Pooled h^1..h^L stacked as a num_layers x hidden_dim matrix; throws
  // DimensionError when concatenation widens a layer.
  Eigen::MatrixXd layer_pooled(const Graph& graph, const FeatureMatrix& x0,
                               const SpectralSummary* spectrum) const;

 private:
  bool adjusts_after(std::size_t layer) const;
  Eigen::RowVectorXd pool(const FeatureMatrix& h) const;

  EmbedConfig config_;
  std::size_t input_dim_;
  std::optional<AdjustConfig> adjust_;
  std::vector<Eigen::MatrixXd> weights_;
  std::size_t output_dim_ = 0;
};

// One-shot form: builds the Embedder for this graph's feature width.
GraphEmbedding embed(const Graph& graph, const EmbedConfig& config,
                     const AdjustConfig* adjust, const SpectralSummary* spectrum);

// Row-normalized (A + I) applied to h.
FeatureMatrix propagate(const Graph& graph, const FeatureMatrix& h);

}  // namespace specgap

#endif  // SPECGAP_EMBED_H_

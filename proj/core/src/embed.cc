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

#include "specgap/embed.h"

#include <cmath>
#include <string>

#include "specgap/error.h"
#include "specgap/random.h"

namespace specgap {

std::string_view to_string(Activation a) {
  return a == Activation::kReLU ? "relu" : "identity";
}

std::string_view to_string(Readout r) {
  return r == Readout::kMeanPool ? "mean" : "sum";
}

Activation parse_activation(std::string_view name) {
  if (name == "relu") return Activation::kReLU;
  if (name == "identity") return Activation::kIdentity;
  throw ConfigError("unknown activation '" + std::string(name) + "'");
}

Readout parse_readout(std::string_view name) {
  if (name == "mean") return Readout::kMeanPool;
  if (name == "sum") return Readout::kSumPool;
  throw ConfigError("unknown readout '" + std::string(name) + "'");
}

std::size_t feature_width(const Graph& graph, const FeatureInit& init) {
  switch (init.kind) {
    case FeatureInit::Kind::kDegreeScalar:
    case FeatureInit::Kind::kConstantOne:
      return 1;
    case FeatureInit::Kind::kDegreeOneHot:
      return init.max_degree + 1;
    case FeatureInit::Kind::kNodeAttributes:
      if (!graph.has_node_attributes()) {
        throw InvalidArgument("node attributes requested but the graph has none");
      }
      return static_cast<std::size_t>(graph.node_attributes().cols());
  }
  return 1;
}

FeatureMatrix init_node_features(const Graph& graph, const FeatureInit& init) {
  const auto n = static_cast<Eigen::Index>(graph.num_nodes());
  switch (init.kind) {
    case FeatureInit::Kind::kDegreeScalar: {
      FeatureMatrix x(n, 1);
      for (Eigen::Index v = 0; v < n; ++v) {
        x(v, 0) = static_cast<double>(graph.degree(static_cast<NodeId>(v)));
      }
      return x;
    }
    case FeatureInit::Kind::kConstantOne:
      return FeatureMatrix::Ones(n, 1);
    case FeatureInit::Kind::kDegreeOneHot: {
      const auto width = static_cast<Eigen::Index>(init.max_degree + 1);
      FeatureMatrix x = FeatureMatrix::Zero(n, width);
      for (Eigen::Index v = 0; v < n; ++v) {
        const auto d = std::min(graph.degree(static_cast<NodeId>(v)), init.max_degree);
        x(v, static_cast<Eigen::Index>(d)) = 1.0;
      }
      return x;
    }
    case FeatureInit::Kind::kNodeAttributes:
      if (!graph.has_node_attributes()) {
        throw InvalidArgument("node attributes requested but the graph has none");
      }
      return graph.node_attributes();
  }
  return {};
}

FeatureMatrix propagate(const Graph& graph, const FeatureMatrix& h) {
  FeatureMatrix out(h.rows(), h.cols());
  for (Eigen::Index v = 0; v < h.rows(); ++v) {
    const auto nbrs = graph.neighbors(static_cast<NodeId>(v));
    Eigen::RowVectorXd acc = h.row(v);
    for (const NodeId u : nbrs) acc += h.row(static_cast<Eigen::Index>(u));
    out.row(v) = acc / static_cast<double>(nbrs.size() + 1);
  }
  return out;
}

Embedder::Embedder(EmbedConfig config, std::size_t input_dim,
                   std::optional<AdjustConfig> adjust)
    : config_(config), input_dim_(input_dim), adjust_(std::move(adjust)) {
  if (config_.num_layers == 0 || config_.hidden_dim == 0 || input_dim_ == 0) {
    throw ConfigError("embedder dimensions must be at least 1");
  }
  const auto& pos = config_.adjust_position;
  if (pos.kind == AdjustPosition::Kind::kAfterLayer &&
      pos.layer > config_.num_layers) {
    throw ConfigError("adjust position after layer " + std::to_string(pos.layer) +
                      " exceeds num_layers = " +
                      std::to_string(config_.num_layers));
  }
  if (pos.kind != AdjustPosition::Kind::kNone && !adjust_) {
    throw ConfigError("an adjust position is set but no adjust config was given");
  }
  const bool widens =
      adjust_ && adjust_->combine_mode == CombineMode::kConcatenation;

  std::size_t width = input_dim_;
  if (widens && adjusts_after(0)) width *= 2;
  for (std::size_t l = 0; l < config_.num_layers; ++l) {
    const std::size_t fan_in = width;
    const std::size_t fan_out = config_.hidden_dim;
    const double s = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Rng rng(derive_seed(config_.weight_seed, l));
    Eigen::MatrixXd w(static_cast<Eigen::Index>(fan_in),
                      static_cast<Eigen::Index>(fan_out));
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      for (Eigen::Index i = 0; i < w.rows(); ++i) {
        w(i, j) = (2.0 * uniform01(rng) - 1.0) * s;
      }
    }
    weights_.push_back(std::move(w));
    width = fan_out;
    if (widens && adjusts_after(l + 1)) width *= 2;
  }
  output_dim_ = width;
}

bool Embedder::adjusts_after(std::size_t layer) const {
  const auto& pos = config_.adjust_position;
  switch (pos.kind) {
    case AdjustPosition::Kind::kNone:
      return false;
    case AdjustPosition::Kind::kAfterLayer:
      return pos.layer == layer;
    case AdjustPosition::Kind::kOutput:
      return layer == config_.num_layers;
  }
  return false;
}

Eigen::RowVectorXd Embedder::pool(const FeatureMatrix& h) const {
  Eigen::RowVectorXd sum = h.colwise().sum();
  if (config_.readout == Readout::kMeanPool && h.rows() > 0) {
    sum /= static_cast<double>(h.rows());
  }
  return sum;
}

std::vector<FeatureMatrix> Embedder::forward(
    const Graph& graph, const FeatureMatrix& x0,
    const SpectralSummary* spectrum) const {
  if (static_cast<std::size_t>(x0.cols()) != input_dim_ ||
      static_cast<std::size_t>(x0.rows()) != graph.num_nodes()) {
    throw DimensionError("initial features are " + std::to_string(x0.rows()) +
                         "x" + std::to_string(x0.cols()) + ", expected " +
                         std::to_string(graph.num_nodes()) + "x" +
                         std::to_string(input_dim_));
  }
  if (config_.adjust_position.kind != AdjustPosition::Kind::kNone &&
      spectrum == nullptr) {
    throw ConfigError("an adjust position is set but no spectrum was given");
  }
  std::vector<FeatureMatrix> layers;
  layers.reserve(config_.num_layers + 1);
  FeatureMatrix h = x0;
  for (std::size_t l = 0;; ++l) {
    if (adjusts_after(l)) h = adjust_features(h, *spectrum, *adjust_);
    layers.push_back(h);
    if (l == config_.num_layers) break;
    FeatureMatrix next = propagate(graph, h) * weights_[l];
    if (config_.activation == Activation::kReLU) next = next.cwiseMax(0.0);
    h = std::move(next);
  }
  return layers;
}

GraphEmbedding Embedder::embed(const Graph& graph, const FeatureMatrix& x0,
                               const SpectralSummary* spectrum,
                               std::size_t graph_id) const {
  const auto layers = forward(graph, x0, spectrum);
  return {pool(layers.back()).transpose(), graph_id};
}

GraphEmbedding Embedder::embed(const Graph& graph,
                               const SpectralSummary* spectrum,
                               std::size_t graph_id) const {
  return embed(graph, init_node_features(graph, config_.feature_init), spectrum,
               graph_id);
}

Eigen::MatrixXd Embedder::layer_pooled(const Graph& graph,
                                       const FeatureMatrix& x0,
                                       const SpectralSummary* spectrum) const {
  const auto layers = forward(graph, x0, spectrum);
  const auto hidden = static_cast<Eigen::Index>(config_.hidden_dim);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(config_.num_layers), hidden);
  for (std::size_t l = 1; l < layers.size(); ++l) {
    if (layers[l].cols() != hidden) {
      throw DimensionError("layer " + std::to_string(l) + " has width " +
                           std::to_string(layers[l].cols()) +
                           "; pooled comparison needs a fixed width of " +
                           std::to_string(hidden));
    }
    out.row(static_cast<Eigen::Index>(l - 1)) = pool(layers[l]);
  }
  return out;
}

GraphEmbedding embed(const Graph& graph, const EmbedConfig& config,
                     const AdjustConfig* adjust,
                     const SpectralSummary* spectrum) {
  std::optional<AdjustConfig> adj;
  if (adjust != nullptr) adj = *adjust;
  const Embedder embedder(config, feature_width(graph, config.feature_init), adj);
  return embedder.embed(graph, spectrum);
}

}  // namespace specgap

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

#include "specgap/graph.h"

#include <algorithm>
#include <string>

#include "specgap/error.h"

namespace specgap {

Graph build_graph(std::size_t num_nodes, std::span<const Edge> edge_list) {
  Graph g;
  g.num_nodes_ = num_nodes;
  g.edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a >= num_nodes || b >= num_nodes) {
      throw InvalidArgument("edge (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") has an endpoint >= " +
                            std::to_string(num_nodes));
    }
    if (a == b) {
      ++g.self_loops_removed_;
      continue;
    }
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  const auto last = std::unique(g.edges_.begin(), g.edges_.end());
  g.duplicates_removed_ = static_cast<std::size_t>(g.edges_.end() - last);
  g.edges_.erase(last, g.edges_.end());

  std::vector<std::size_t> deg(num_nodes, 0);
  for (const auto& [a, b] : g.edges_) {
    ++deg[a];
    ++deg[b];
  }
  g.row_offsets_.assign(num_nodes + 1, 0);
  for (std::size_t v = 0; v < num_nodes; ++v) {
    g.row_offsets_[v + 1] = g.row_offsets_[v] + deg[v];
  }
  g.col_index_.resize(g.row_offsets_.back());
  // Canonical sorted edges fill each row in ascending neighbor order: lower
  // neighbors arrive from edges (u, v) before any edge (v, w) is visited.
  std::vector<std::size_t> cursor(g.row_offsets_.begin(),
                                  g.row_offsets_.end() - 1);
  for (const auto& [a, b] : g.edges_) {
    g.col_index_[cursor[a]++] = b;
    g.col_index_[cursor[b]++] = a;
  }
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(num_nodes_);
  for (std::size_t v = 0; v < num_nodes_; ++v) {
    out[v] = degree(static_cast<NodeId>(v));
  }
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_nodes_; ++v) {
    best = std::max(best, degree(static_cast<NodeId>(v)));
  }
  return best;
}

Graph Graph::with_node_attributes(Eigen::MatrixXd attributes) const {
  if (static_cast<std::size_t>(attributes.rows()) != num_nodes_) {
    throw DimensionError("node attributes have " +
                         std::to_string(attributes.rows()) + " rows for " +
                         std::to_string(num_nodes_) + " nodes");
  }
  Graph g = *this;
  g.node_attributes_ = std::move(attributes);
  return g;
}

Graph Graph::relabeled(std::span<const NodeId> perm) const {
  if (perm.size() != num_nodes_) {
    throw DimensionError("permutation length does not match node count");
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const auto& [a, b] : edges_) mapped.emplace_back(perm[a], perm[b]);
  Graph g = build_graph(num_nodes_, mapped);
  if (node_attributes_) {
    Eigen::MatrixXd attrs(node_attributes_->rows(), node_attributes_->cols());
    for (std::size_t v = 0; v < num_nodes_; ++v) {
      attrs.row(perm[v]) = node_attributes_->row(static_cast<Eigen::Index>(v));
    }
    g.node_attributes_ = std::move(attrs);
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.num_nodes_ != b.num_nodes_ || a.edges_ != b.edges_) return false;
  if (a.node_attributes_.has_value() != b.node_attributes_.has_value()) {
    return false;
  }
  return !a.node_attributes_ || *a.node_attributes_ == *b.node_attributes_;
}

}  // namespace specgap

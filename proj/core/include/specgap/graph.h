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

#ifndef SPECGAP_GRAPH_H_
#define SPECGAP_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace specgap {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Immutable undirected simple graph stored as CSR adjacency.
//
// Edges are kept canonical (first < second, sorted lexicographically) and
// every neighbor list is sorted, so two graphs built from the same edge set
// compare equal regardless of the input order.
class Graph {
 public:
  Graph() = default;

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {col_index_.data() + row_offsets_[v],
            row_offsets_[v + 1] - row_offsets_[v]};
  }
  std::size_t degree(NodeId v) const {
    return row_offsets_[v + 1] - row_offsets_[v];
  }
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;

  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<NodeId>& col_index() const { return col_index_; }

  // Sanitization counters from construction.
  std::size_t self_loops_removed() const { return self_loops_removed_; }
  std::size_t duplicates_removed() const { return duplicates_removed_; }

  bool has_node_attributes() const { return node_attributes_.has_value(); }
  const Eigen::MatrixXd& node_attributes() const { return *node_attributes_; }

  // Copy of this graph carrying the given n x a attribute rows.
  Graph with_node_attributes(Eigen::MatrixXd attributes) const;

  // Graph with node v renamed to perm[v].
  Graph relabeled(std::span<const NodeId> perm) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>);

  std::size_t num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<NodeId> col_index_;
  std::optional<Eigen::MatrixXd> node_attributes_;
  std::size_t self_loops_removed_ = 0;
  std::size_t duplicates_removed_ = 0;
};

// Builds the canonical simple graph over `num_nodes` vertices. Duplicate
// edges (in either orientation) are collapsed and self-loops dropped; both
// are counted on the result. Throws InvalidArgument naming the first edge
// with an endpoint >= num_nodes.
Graph build_graph(std::size_t num_nodes, std::span<const Edge> edge_list);

inline Graph build_graph(std::size_t num_nodes,
                         std::initializer_list<Edge> edge_list) {
  return build_graph(num_nodes,
                     std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

}  // namespace specgap

#endif  // SPECGAP_GRAPH_H_

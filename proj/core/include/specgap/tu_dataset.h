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

#ifndef SPECGAP_TU_DATASET_H_
#define SPECGAP_TU_DATASET_H_

#include <filesystem>
#include <string>

#include "specgap/collection.h"
#include "specgap/graph.h"

namespace specgap {

// Reads <name>_A.txt and <name>_graph_indicator.txt, plus the optional
// <name>_graph_labels.txt and <name>_node_attributes.txt, from `directory`.
// Nodes are renumbered 0-based within each graph in file order. The graph
// count is the number of label lines when labels exist, otherwise the
// largest indicator value.
//
// Errors are ParseError with the file and 1-based line: a missing
// mandatory file, an empty indicator file, a node pointing at a graph id
// outside [1, count], an edge endpoint outside the node range, an edge
// joining two graphs, or a ragged attribute row.
GraphCollection parse_tu_dataset(const std::filesystem::path& directory,
                                 const std::string& name);

// One edge per line, "u v" or "u,v", 0-based; blank lines and lines
// starting with '#' are skipped. num_nodes = 0 means max id + 1.
Graph read_edge_list(const std::filesystem::path& file, std::size_t num_nodes = 0);

// Writes the same layout (edges in both directions, labels when present).
void write_tu_dataset(const GraphCollection& collection,
                      const std::filesystem::path& directory,
                      const std::string& name);

}  // namespace specgap

#endif  // SPECGAP_TU_DATASET_H_

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

#ifndef SPECGAP_COLLECTION_H_
#define SPECGAP_COLLECTION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specgap/graph.h"

namespace specgap {

enum class DistLabel { kID, kOOD };
enum class Split { kTrain, kVal, kTest };

std::string_view to_string(DistLabel label);
std::string_view to_string(Split split);

// Labeled set of graphs. The optional per-graph arrays are either empty or
// exactly graphs.size() long.
struct GraphCollection {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<long> graph_labels;
  std::vector<Split> split;
  std::vector<DistLabel> dist_label;
  // Stable identifier per graph (index in the source collection).
  std::vector<std::size_t> graph_ids;

  std::size_t size() const { return graphs.size(); }
  // Throws DimensionError when a non-empty array has the wrong length.
  void validate() const;
};

}  // namespace specgap

#endif  // SPECGAP_COLLECTION_H_

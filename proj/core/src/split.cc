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

#include "specgap/split.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "specgap/error.h"
#include "specgap/random.h"

namespace specgap {

std::string_view to_string(DistLabel label) {
  return label == DistLabel::kID ? "ID" : "OOD";
}

std::string_view to_string(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kVal:
      return "val";
    case Split::kTest:
      return "test";
  }
  return "train";
}

void GraphCollection::validate() const {
  auto check = [&](std::size_t len, const char* field) {
    if (len != 0 && len != graphs.size()) {
      throw DimensionError("collection '" + name + "': " + field + " has " +
                           std::to_string(len) + " entries for " +
                           std::to_string(graphs.size()) + " graphs");
    }
  };
  check(graph_labels.size(), "graph_labels");
  check(split.size(), "split");
  check(dist_label.size(), "dist_label");
  check(graph_ids.size(), "graph_ids");
}

namespace {

// Fisher-Yates driven by uniform_index so the order does not depend on the
// standard library's shuffle.
std::vector<std::size_t> shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(idx[i - 1], idx[static_cast<std::size_t>(uniform_index(rng, i))]);
  }
  return idx;
}

}  // namespace

GraphCollection split_id_ood(const GraphCollection& id_collection,
                             const GraphCollection& ood_collection,
                             std::uint64_t seed) {
  id_collection.validate();
  ood_collection.validate();
  const std::size_t n_id = id_collection.size();
  const std::size_t n_train = (8 * n_id) / 10;
  const std::size_t n_val = (n_id - n_train) / 2;
  const std::size_t n_test = n_id - n_train - n_val;
  const std::size_t needed = n_val + n_test;
  if (n_id == 0) throw InvalidArgument("split_id_ood: no ID graphs");
  if (ood_collection.size() < needed || needed == 0) {
    throw InvalidArgument("split_id_ood: need " + std::to_string(std::max<std::size_t>(needed, 1)) +
                          " OOD graphs, got " + std::to_string(ood_collection.size()));
  }

  Rng id_rng(derive_seed(seed, 0));
  Rng ood_rng(derive_seed(seed, 1));
  const std::vector<std::size_t> id_order = shuffled(n_id, id_rng);
  const std::vector<std::size_t> ood_order = shuffled(ood_collection.size(), ood_rng);

  GraphCollection out;
  out.name = id_collection.name + "+" + ood_collection.name;
  const bool labels = !id_collection.graph_labels.empty() &&
                      !ood_collection.graph_labels.empty();
  auto push = [&](const GraphCollection& src, std::size_t i, std::size_t id,
                  Split s, DistLabel d) {
    out.graphs.push_back(src.graphs[i]);
    if (labels) out.graph_labels.push_back(src.graph_labels[i]);
    out.split.push_back(s);
    out.dist_label.push_back(d);
    out.graph_ids.push_back(id);
  };
  for (std::size_t r = 0; r < n_id; ++r) {
    const Split s = r < n_train ? Split::kTrain
                    : r < n_train + n_val ? Split::kVal
                                          : Split::kTest;
    push(id_collection, id_order[r], id_order[r], s, DistLabel::kID);
  }
  for (std::size_t r = 0; r < needed; ++r) {
    const Split s = r < n_val ? Split::kVal : Split::kTest;
    push(ood_collection, ood_order[r], n_id + ood_order[r], s, DistLabel::kOOD);
  }
  return out;
}

}  // namespace specgap

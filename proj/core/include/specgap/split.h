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

#ifndef SPECGAP_SPLIT_H_
#define SPECGAP_SPLIT_H_

#include <cstdint>

#include "specgap/collection.h"

namespace specgap {

// Seeded 80/10/10 split of the ID graphs; val and test each receive as many
// OOD graphs as they have ID graphs, drawn without replacement. With n ID
// graphs, train = floor(0.8 n) and val = floor((n - train) / 2). graph_ids
// are the ID index for ID graphs and n_id + OOD index for OOD graphs.
// Throws InvalidArgument when the OOD pool is too small.
GraphCollection split_id_ood(const GraphCollection& id_collection,
                             const GraphCollection& ood_collection,
                             std::uint64_t seed);

}  // namespace specgap

#endif  // SPECGAP_SPLIT_H_

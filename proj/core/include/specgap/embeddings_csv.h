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

#ifndef SPECGAP_EMBEDDINGS_CSV_H_
#define SPECGAP_EMBEDDINGS_CSV_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "specgap/embed.h"

namespace specgap {

// CSV with header "graph_id,f0,f1,...", one row per graph. Values are
// written in shortest round-trip form, so export then import is bit-exact.
// Import throws ParseError on a bad header, a ragged row, a bad number or
// a repeated graph_id, naming the offending line.
std::vector<GraphEmbedding> import_embeddings(const std::filesystem::path& file);
std::vector<GraphEmbedding> read_embeddings(std::istream& in,
                                            const std::string& source_name);

void export_embeddings(const std::vector<GraphEmbedding>& embeddings,
                       const std::filesystem::path& file);
void write_embeddings(const std::vector<GraphEmbedding>& embeddings, std::ostream& out);

// Rows of `embeddings` stacked into a matrix. Throws DimensionError on
// mixed widths.
Eigen::MatrixXd stack_embeddings(const std::vector<GraphEmbedding>& embeddings);

}  // namespace specgap

#endif  // SPECGAP_EMBEDDINGS_CSV_H_

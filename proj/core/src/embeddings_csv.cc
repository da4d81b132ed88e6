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

#include "specgap/embeddings_csv.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "specgap/error.h"
#include "text_io.h"

namespace specgap {

std::vector<GraphEmbedding> read_embeddings(std::istream& in, const std::string& source) {
  std::string line;
  long number = 0;
  std::size_t width = 0;
  bool have_header = false;
  std::vector<GraphEmbedding> out;
  std::unordered_set<std::size_t> seen;
  while (std::getline(in, line)) {
    ++number;
    if (text::trim(line).empty()) continue;
    const auto fields = text::split_commas(line);
    if (!have_header) {
      if (fields.empty() || fields[0] != "graph_id") {
        throw ParseError(source, number, "header must start with 'graph_id'");
      }
      for (std::size_t c = 1; c < fields.size(); ++c) {
        if (fields[c] != "f" + std::to_string(c - 1)) {
          throw ParseError(source, number, "expected column 'f" + std::to_string(c - 1) +
                                               "', got '" + std::string(fields[c]) + "'");
        }
      }
      width = fields.size() - 1;
      have_header = true;
      continue;
    }
    if (fields.size() != width + 1) {
      throw ParseError(source, number, "expected " + std::to_string(width + 1) +
                                           " columns, got " + std::to_string(fields.size()));
    }
    GraphEmbedding e;
    e.source_graph_id = text::parse_number<std::size_t>(fields[0], source, number);
    if (!seen.insert(e.source_graph_id).second) {
      throw ParseError(source, number,
                       "duplicate graph_id " + std::to_string(e.source_graph_id));
    }
    e.vector.resize(static_cast<Eigen::Index>(width));
    for (std::size_t c = 0; c < width; ++c) {
      e.vector[static_cast<Eigen::Index>(c)] =
          text::parse_number<double>(fields[c + 1], source, number);
    }
    out.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(source, 0, "missing header");
  return out;
}

std::vector<GraphEmbedding> import_embeddings(const std::filesystem::path& file) {
  std::ifstream in = text::open_input(file);
  return read_embeddings(in, file.string());
}

void write_embeddings(const std::vector<GraphEmbedding>& embeddings, std::ostream& out) {
  const Eigen::Index width = embeddings.empty() ? 0 : embeddings[0].vector.size();
  out << "graph_id";
  for (Eigen::Index c = 0; c < width; ++c) out << ",f" << c;
  out << '\n';
  for (const auto& e : embeddings) {
    if (e.vector.size() != width) {
      throw DimensionError("embedding for graph " + std::to_string(e.source_graph_id) +
                           " has width " + std::to_string(e.vector.size()) +
                           ", expected " + std::to_string(width));
    }
    out << e.source_graph_id;
    for (Eigen::Index c = 0; c < width; ++c) out << ',' << text::format_double(e.vector[c]);
    out << '\n';
  }
}

void export_embeddings(const std::vector<GraphEmbedding>& embeddings,
                       const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + file.string());
  write_embeddings(embeddings, out);
}

Eigen::MatrixXd stack_embeddings(const std::vector<GraphEmbedding>& embeddings) {
  if (embeddings.empty()) return {};
  const Eigen::Index width = embeddings[0].vector.size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(embeddings.size()), width);
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    if (embeddings[i].vector.size() != width) {
      throw DimensionError("embedding " + std::to_string(i) + " has width " +
                           std::to_string(embeddings[i].vector.size()) + ", expected " +
                           std::to_string(width));
    }
    m.row(static_cast<Eigen::Index>(i)) = embeddings[i].vector.transpose();
  }
  return m;
}

}  // namespace specgap

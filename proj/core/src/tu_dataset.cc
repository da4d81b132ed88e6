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

#include "specgap/tu_dataset.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <optional>
#include <vector>

#include "specgap/error.h"
#include "text_io.h"

namespace specgap {
namespace {

namespace fs = std::filesystem;

struct Line {
  long number;
  std::string text;
};

std::vector<Line> read_lines(const fs::path& path) {
  std::ifstream in = text::open_input(path);
  std::vector<Line> lines;
  std::string s;
  long n = 0;
  while (std::getline(in, s)) {
    ++n;
    if (text::trim(s).empty()) continue;
    lines.push_back({n, std::move(s)});
  }
  return lines;
}

}  // namespace

GraphCollection parse_tu_dataset(const fs::path& directory, const std::string& name) {
  const fs::path a_path = directory / (name + "_A.txt");
  const fs::path ind_path = directory / (name + "_graph_indicator.txt");
  const fs::path lab_path = directory / (name + "_graph_labels.txt");
  const fs::path attr_path = directory / (name + "_node_attributes.txt");
  for (const auto& p : {ind_path, a_path}) {
    if (!fs::exists(p)) throw ParseError(p.string(), 0, "missing mandatory file");
  }

  GraphCollection out;
  out.name = name;
  if (fs::exists(lab_path)) {
    for (const Line& l : read_lines(lab_path)) {
      out.graph_labels.push_back(
          text::parse_number<long>(text::trim(l.text), lab_path.string(), l.number));
    }
  }

  const std::vector<Line> ind = read_lines(ind_path);
  if (ind.empty()) throw ParseError(ind_path.string(), 0, "indicator file is empty");
  std::vector<long> graph_of(ind.size());
  long max_id = 0;
  for (std::size_t i = 0; i < ind.size(); ++i) {
    graph_of[i] = text::parse_number<long>(text::trim(ind[i].text), ind_path.string(),
                                           ind[i].number);
    max_id = std::max(max_id, graph_of[i]);
  }
  const long count = out.graph_labels.empty()
                         ? max_id
                         : static_cast<long>(out.graph_labels.size());
  std::vector<std::size_t> local(ind.size());
  std::vector<std::size_t> sizes(static_cast<std::size_t>(count), 0);
  for (std::size_t i = 0; i < ind.size(); ++i) {
    if (graph_of[i] < 1 || graph_of[i] > count) {
      throw ParseError(ind_path.string(), ind[i].number,
                       "node refers to graph " + std::to_string(graph_of[i]) +
                           ", valid ids are 1.." + std::to_string(count));
    }
    local[i] = sizes[graph_of[i] - 1]++;
  }

  std::vector<std::vector<Edge>> edges(static_cast<std::size_t>(count));
  for (const Line& l : read_lines(a_path)) {
    const auto fields = text::split_commas(l.text);
    if (fields.size() != 2) {
      throw ParseError(a_path.string(), l.number, "expected two comma-separated node ids");
    }
    long ends[2];
    for (int e = 0; e < 2; ++e) {
      ends[e] = text::parse_number<long>(fields[e], a_path.string(), l.number);
      if (ends[e] < 1 || ends[e] > static_cast<long>(ind.size())) {
        throw ParseError(a_path.string(), l.number,
                         "node " + std::to_string(ends[e]) + " does not exist");
      }
    }
    const long g = graph_of[ends[0] - 1];
    if (g != graph_of[ends[1] - 1]) {
      throw ParseError(a_path.string(), l.number, "edge joins two different graphs");
    }
    edges[g - 1].emplace_back(static_cast<NodeId>(local[ends[0] - 1]),
                              static_cast<NodeId>(local[ends[1] - 1]));
  }

  std::optional<std::vector<std::vector<double>>> attrs;
  std::size_t attr_width = 0;
  if (fs::exists(attr_path)) {
    const std::vector<Line> rows = read_lines(attr_path);
    if (rows.size() != ind.size()) {
      throw ParseError(attr_path.string(), 0,
                       std::to_string(rows.size()) + " attribute rows for " +
                           std::to_string(ind.size()) + " nodes");
    }
    attrs.emplace();
    for (const Line& l : rows) {
      const auto fields = text::split_commas(l.text);
      if (attrs->empty()) attr_width = fields.size();
      if (fields.size() != attr_width) {
        throw ParseError(attr_path.string(), l.number,
                         "expected " + std::to_string(attr_width) + " columns, got " +
                             std::to_string(fields.size()));
      }
      std::vector<double> row;
      for (auto f : fields) row.push_back(text::parse_number<double>(f, attr_path.string(), l.number));
      attrs->push_back(std::move(row));
    }
  }

  std::vector<Eigen::MatrixXd> attr_mats;
  if (attrs) {
    for (long g = 0; g < count; ++g) {
      attr_mats.emplace_back(sizes[g], attr_width);
    }
    for (std::size_t i = 0; i < ind.size(); ++i) {
      for (std::size_t c = 0; c < attr_width; ++c) {
        attr_mats[graph_of[i] - 1](static_cast<Eigen::Index>(local[i]),
                                   static_cast<Eigen::Index>(c)) = (*attrs)[i][c];
      }
    }
  }

  for (long g = 0; g < count; ++g) {
    Graph graph = build_graph(sizes[g], edges[g]);
    if (attrs) graph = graph.with_node_attributes(std::move(attr_mats[g]));
    out.graphs.push_back(std::move(graph));
    out.graph_ids.push_back(static_cast<std::size_t>(g));
  }
  return out;
}

Graph read_edge_list(const fs::path& file, std::size_t num_nodes) {
  std::vector<Edge> edges;
  std::size_t max_id = 0;
  for (const Line& l : read_lines(file)) {
    const auto t = text::trim(l.text);
    if (t.front() == '#') continue;
    std::string s(t);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream row(s);
    std::string a, b, extra;
    if (!(row >> a >> b) || (row >> extra)) {
      throw ParseError(file.string(), l.number, "expected two node ids");
    }
    const auto u = text::parse_number<NodeId>(a, file.string(), l.number);
    const auto v = text::parse_number<NodeId>(b, file.string(), l.number);
    max_id = std::max<std::size_t>({max_id, u, v});
    edges.emplace_back(u, v);
  }
  const std::size_t n = num_nodes ? num_nodes : (edges.empty() ? 0 : max_id + 1);
  return build_graph(n, edges);
}

void write_tu_dataset(const GraphCollection& collection, const fs::path& directory,
                      const std::string& name) {
  collection.validate();
  fs::create_directories(directory);
  auto open = [&](const std::string& suffix) {
    const fs::path p = directory / (name + suffix);
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + p.string());
    return f;
  };
  std::ofstream a = open("_A.txt");
  std::ofstream ind = open("_graph_indicator.txt");
  std::size_t offset = 1;
  for (std::size_t g = 0; g < collection.size(); ++g) {
    const Graph& graph = collection.graphs[g];
    for (std::size_t v = 0; v < graph.num_nodes(); ++v) ind << (g + 1) << '\n';
    for (const auto& [u, v] : graph.edges()) {
      a << (u + offset) << ", " << (v + offset) << '\n';
      a << (v + offset) << ", " << (u + offset) << '\n';
    }
    offset += graph.num_nodes();
  }
  if (!collection.graph_labels.empty()) {
    std::ofstream lab = open("_graph_labels.txt");
    for (long l : collection.graph_labels) lab << l << '\n';
  }
}

}  // namespace specgap

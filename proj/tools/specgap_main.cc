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

// specgap: command-line front end.
//
//   specgap eig --model er:50:0.2 --k 3
//   specgap gap --tu data/ --name PROTEINS --variant normalized
//   specgap detect --config run.json --out report.json --scores scores.csv
//   specgap theorem --id er:30:0.5 --ood rewired:0.4:er:30:0.5
//
// JSON goes to --out when given, otherwise to stdout.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specgap/adjust.h"
#include "specgap/embeddings_csv.h"
#include "specgap/error.h"
#include "specgap/experiment.h"
#include "specgap/lanczos.h"
#include "specgap/laplacian.h"
#include "specgap/report.h"
#include "specgap/scaling.h"
#include "specgap/synth.h"
#include "specgap/tu_dataset.h"

namespace {

using namespace specgap;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::string variant = "unnormalized";
  double tol = 1e-8;
  std::string out;
  std::size_t threads = 1;
  bool timings = false;

  std::uint64_t seed_or(std::uint64_t fallback) const { return seed.value_or(fallback); }
  LaplacianVariant laplacian_variant() const { return parse_laplacian_variant(variant); }
  LanczosConfig lanczos() const {
    LanczosConfig c;
    c.tol = tol;
    c.seed = seed_or(0);
    return c;
  }
};

void emit(const GlobalFlags& g, const std::string& content) {
  if (g.out.empty()) {
    std::cout << content;
  } else {
    write_text_file(g.out, content);
  }
}

// Graph input shared by eig: exactly one of --edges, --tu/--name, --model.
struct GraphSource {
  std::string edges;
  std::string tu_dir;
  std::string tu_name;
  std::size_t index = 0;
  std::string model;

  void add(CLI::App* cmd) {
    cmd->add_option("--edges", edges, "Edge-list file (0-based \"u v\" per line)");
    cmd->add_option("--tu", tu_dir, "TU dataset directory");
    cmd->add_option("--name", tu_name, "TU dataset name");
    cmd->add_option("--index", index, "Graph index within the TU dataset");
    cmd->add_option("--model", model, "Generator, e.g. er:50:0.2");
  }

  Graph load(std::uint64_t seed) const {
    const int given = !edges.empty() + !tu_dir.empty() + !model.empty();
    if (given != 1) throw ConfigError("give exactly one of --edges, --tu, --model");
    if (!edges.empty()) return read_edge_list(edges);
    if (!model.empty()) return sample_graph(parse_model_spec(model), seed);
    const GraphCollection c = parse_tu_dataset(tu_dir, tu_name);
    if (index >= c.size()) {
      throw ConfigError("--index " + std::to_string(index) + " out of range (dataset has " +
                        std::to_string(c.size()) + " graphs)");
    }
    return c.graphs[index];
  }
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral-gap tools for graph OOD detection"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--variant", g.variant, "unnormalized|normalized|signless")
      ->check(CLI::IsMember({"unnormalized", "normalized", "signless"}));
  app.add_option("--tol", g.tol, "Lanczos Ritz-value tolerance");
  app.add_option("--out", g.out, "Output path (default stdout)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timings", g.timings, "Include runtimes in detect reports");

  // eig
  auto* eig = app.add_subcommand("eig", "Top-k Laplacian eigenpairs of one graph");
  GraphSource eig_src;
  eig_src.add(eig);
  std::size_t eig_k = 2;
  std::size_t eig_max_iter = 0;
  bool eig_history = false;
  eig->add_option("--k", eig_k, "Number of eigenpairs");
  eig->add_option("--max-iter", eig_max_iter, "Iteration budget (0 = min(n, 300))");
  eig->add_flag("--history", eig_history, "Record Ritz history and orthogonality loss");
  eig->callback([&] {
    const Graph graph = eig_src.load(g.seed_or(0));
    LanczosConfig cfg = g.lanczos();
    cfg.k = eig_k;
    cfg.max_iter = eig_max_iter;
    cfg.record_history = eig_history;
    emit(g, to_json(lanczos_top_k(laplacian(graph, g.laplacian_variant()), cfg)));
  });

  // gap
  auto* gap = app.add_subcommand("gap", "Spectral-gap distribution of a collection");
  std::string gap_tu, gap_name, gap_model;
  std::size_t gap_count = 100, gap_bins = 20;
  gap->add_option("--tu", gap_tu, "TU dataset directory");
  gap->add_option("--name", gap_name, "TU dataset name");
  gap->add_option("--model", gap_model, "Generator for a synthetic ensemble");
  gap->add_option("--count", gap_count, "Ensemble size");
  gap->add_option("--bins", gap_bins, "Histogram bins");
  gap->callback([&] {
    if (gap_tu.empty() == gap_model.empty()) throw ConfigError("give exactly one of --tu, --model");
    const GraphCollection c = gap_model.empty()
                                  ? parse_tu_dataset(gap_tu, gap_name)
                                  : generate({parse_model_spec(gap_model), gap_count, g.seed_or(0)});
    GapDistributionOptions opt;
    opt.lanczos = g.lanczos();
    opt.bins = gap_bins;
    opt.threads = g.threads;
    emit(g, to_json(gap_distribution(c, g.laplacian_variant(), opt)));
  });

  // adjust
  auto* adj = app.add_subcommand("adjust", "Apply the spectral adjustment to node features");
  std::string adj_features, adj_spectrum, adj_gap = "scaled_subtraction",
                                          adj_combine = "subtraction", adj_proj = "eigenvector";
  std::size_t adj_pairs = 2;
  adj->add_option("--features", adj_features, "Node-feature CSV (graph_id = node index)")
      ->required();
  adj->add_option("--spectrum", adj_spectrum, "Spectrum JSON from 'eig'")->required();
  adj->add_option("--gap-mode", adj_gap,
                  "scaled_subtraction|simple_subtraction|relative_difference|none");
  adj->add_option("--combine", adj_combine, "subtraction|multiplication|concatenation");
  adj->add_option("--projection", adj_proj, "eigenvector|random:SEED|none");
  adj->add_option("--pairs", adj_pairs, "Eigenpairs used");
  adj->callback([&] {
    const std::vector<GraphEmbedding> rows = import_embeddings(adj_features);
    const SpectralSummary s = parse_spectrum(read_text_file(adj_spectrum));
    AdjustConfig cfg;
    cfg.gap_mode = parse_gap_mode(adj_gap);
    cfg.combine_mode = parse_combine_mode(adj_combine);
    cfg.projection = parse_projection(adj_proj);
    cfg.num_eigenpairs = adj_pairs;
    const FeatureMatrix x = adjust_features(stack_embeddings(rows), s, cfg);
    std::vector<GraphEmbedding> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out[i] = {x.row(static_cast<Eigen::Index>(i)).transpose(), rows[i].source_graph_id};
    }
    std::ostringstream os;
    write_embeddings(out, os);
    emit(g, os.str());
  });

  // detect
  auto* det = app.add_subcommand("detect", "Run an OOD-detection experiment");
  std::string det_config, det_scores;
  bool det_print_config = false;
  det->add_option("--config", det_config, "Experiment config JSON");
  det->add_option("--scores", det_scores, "Write per-graph test scores CSV here");
  det->add_flag("--print-config", det_print_config, "Print the resolved config and exit");
  det->callback([&] {
    ExperimentConfig cfg = det_config.empty() ? ExperimentConfig{} : load_experiment_config(det_config);
    if (det_config.empty()) {
      cfg.dataset = EnsembleSource{parse_model_spec("er:30:0.5"),
                                   parse_model_spec("rewired:0.4:er:30:0.5"), 200, 200};
    }
    if (g.seed) cfg.master_seed = *g.seed;
    if (det->get_parent()->get_option("--variant")->count()) cfg.variant = g.laplacian_variant();
    if (det->get_parent()->get_option("--tol")->count()) cfg.lanczos.tol = g.tol;
    if (det->get_parent()->get_option("--threads")->count()) cfg.threads = g.threads;
    if (det_print_config) {
      emit(g, to_json(cfg));
      return;
    }
    const EvalReport r = run_experiment(cfg);
    emit(g, to_json(r, g.timings));
    if (!det_scores.empty()) {
      std::ostringstream os;
      write_scores_csv(r, os);
      write_text_file(det_scores, os.str());
    }
  });

  // synth
  auto* syn = app.add_subcommand("synth", "Write a generated ensemble in TU format");
  std::string syn_model, syn_name = "SYNTH";
  std::size_t syn_count = 100;
  syn->add_option("--model", syn_model, "Generator, e.g. sbm:15,15:0.5:0.05")->required();
  syn->add_option("--count", syn_count, "Number of graphs");
  syn->add_option("--name", syn_name, "Dataset name (file prefix)");
  syn->callback([&] {
    if (g.out.empty()) throw ConfigError("synth needs --out <directory>");
    const GraphCollection c = generate({parse_model_spec(syn_model), syn_count, g.seed_or(0)});
    write_tu_dataset(c, g.out, syn_name);
  });

  // theorem
  auto* thm = app.add_subcommand("theorem", "Monte Carlo separation-gain experiment");
  std::string thm_id = "er:30:0.5", thm_ood = "rewired:0.4:er:30:0.5";
  std::string thm_position = "after_layer:0", thm_gap = "scaled_subtraction";
  std::size_t thm_pairs = 500, thm_resamples = 1000, thm_layers = 3, thm_hidden = 32;
  std::optional<std::uint64_t> thm_ood_seed;
  thm->add_option("--id", thm_id, "ID generator");
  thm->add_option("--ood", thm_ood, "OOD generator");
  thm->add_option("--ood-seed", thm_ood_seed, "OOD ensemble seed (default: same as ID)");
  thm->add_option("--pairs", thm_pairs, "Number of (ID, OOD) pairs");
  thm->add_option("--resamples", thm_resamples, "Bootstrap resamples");
  thm->add_option("--position", thm_position, "none|output|after_layer:L");
  thm->add_option("--gap-mode", thm_gap, "Gap mode of the adjustment");
  thm->add_option("--layers", thm_layers, "Embedding layers");
  thm->add_option("--hidden", thm_hidden, "Hidden width");
  thm->callback([&] {
    const std::uint64_t seed = g.seed_or(0);
    EmbedConfig ecfg;
    ecfg.num_layers = thm_layers;
    ecfg.hidden_dim = thm_hidden;
    ecfg.weight_seed = seed;
    ecfg.adjust_position = parse_adjust_position(thm_position);
    AdjustConfig acfg;
    acfg.gap_mode = parse_gap_mode(thm_gap);
    GainOptions opt;
    opt.variant = g.laplacian_variant();
    opt.lanczos = g.lanczos();
    opt.num_pairs = thm_pairs;
    opt.bootstrap_resamples = thm_resamples;
    opt.bootstrap_seed = seed;
    opt.threads = g.threads;
    emit(g, to_json(separation_gain_experiment({parse_model_spec(thm_id), thm_pairs, seed},
                                               {parse_model_spec(thm_ood), thm_pairs,
                                                thm_ood_seed.value_or(seed)},
                                               ecfg, acfg, opt)));
  });

  // bench
  auto* bench = app.add_subcommand("bench", "Lanczos cost versus nnz on sparse ER graphs");
  std::string bench_sizes = "1000,2000,4000";
  double bench_degree = 10.0;
  std::size_t bench_steps = 60, bench_repeats = 5;
  bench->add_option("--sizes", bench_sizes, "Comma-separated node counts");
  bench->add_option("--avg-degree", bench_degree, "Expected degree");
  bench->add_option("--steps", bench_steps, "Lanczos steps per run");
  bench->add_option("--repeats", bench_repeats, "Repeats per size (median reported)");
  bench->callback([&] {
    const auto points =
        lanczos_scaling(parse_sizes(bench_sizes), bench_degree, bench_steps, bench_repeats,
                        g.seed_or(0));
    std::ostringstream os;
    os << "n,nnz,steps,ms,ms_per_step_per_knnz\n";
    for (const auto& p : points) {
      os << p.n << ',' << p.nnz << ',' << p.steps << ',' << p.ms << ','
         << p.ms / static_cast<double>(p.steps) / (static_cast<double>(p.nnz) / 1000.0) << '\n';
    }
    emit(g, os.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const specgap::Error& e) {
    std::cerr << "specgap: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "specgap: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

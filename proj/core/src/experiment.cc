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

#include "specgap/experiment.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>

#include "specgap/error.h"
#include "specgap/parallel.h"
#include "specgap/random.h"
#include "specgap/scoring.h"
#include "specgap/split.h"
#include "specgap/tu_dataset.h"

namespace specgap {
namespace {

// Sub-seeds drawn from the master seed.
constexpr std::uint64_t kIdEnsembleStream = 0;
constexpr std::uint64_t kOodEnsembleStream = 1;
constexpr std::uint64_t kSplitStream = 2;
constexpr std::uint64_t kLanczosStream = 3;
constexpr std::uint64_t kWeightStream = 4;

class LapTimer {
 public:
  LapTimer() : start_(Clock::now()), last_(start_) {}

  void lap(const std::string& stage, std::vector<StageTiming>& out) {
    const auto now = Clock::now();
    out.push_back({stage, ms(last_, now)});
    last_ = now;
  }
  double total() const { return ms(start_, last_); }

 private:
  using Clock = std::chrono::steady_clock;
  static double ms(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  }
  Clock::time_point start_;
  Clock::time_point last_;
};

template <typename F>
auto stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError("bad integer '" + std::string(s) + "' in '" + std::string(whole) + "'");
  }
  return v;
}

double parse_real(std::string_view s, std::string_view whole) {
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError("bad number '" + std::string(s) + "' in '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

bool all_have_attributes(const GraphCollection& c) {
  return !c.graphs.empty() &&
         std::all_of(c.graphs.begin(), c.graphs.end(),
                     [](const Graph& g) { return g.has_node_attributes(); });
}

Eigen::MatrixXd rows_where(const Eigen::MatrixXd& m, const GraphCollection& c, Split s) {
  std::vector<Eigen::Index> idx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.split[i] == s) idx.push_back(static_cast<Eigen::Index>(i));
  }
  Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), m.cols());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) = m.row(idx[r]);
  }
  return out;
}

}  // namespace

std::string_view to_string(ScorerConfig::Kind kind) {
  switch (kind) {
    case ScorerConfig::Kind::kSSD:
      return "ssd";
    case ScorerConfig::Kind::kLOF:
      return "lof";
    case ScorerConfig::Kind::kGapThreshold:
      return "gap_threshold";
  }
  return "ssd";
}

ScorerConfig::Kind parse_scorer_kind(std::string_view name) {
  if (name == "ssd") return ScorerConfig::Kind::kSSD;
  if (name == "lof") return ScorerConfig::Kind::kLOF;
  if (name == "gap_threshold") return ScorerConfig::Kind::kGapThreshold;
  throw ConfigError("unknown scorer '" + std::string(name) +
                    "' (expected ssd|lof|gap_threshold)");
}

bool operator==(const TauChoice& a, const TauChoice& b) {
  return a.tau == b.tau && a.orientation == b.orientation &&
         a.empirical_error == b.empirical_error;
}

bool operator==(const EvalReport& a, const EvalReport& b) {
  return a.name == b.name && a.method == b.method && a.metrics == b.metrics &&
         a.tau == b.tau && a.runtime_ms == b.runtime_ms && a.total_ms == b.total_ms &&
         a.scores == b.scores;
}

void validate(const ExperimentConfig& config) {
  if (const auto* e = std::get_if<EnsembleSource>(&config.dataset)) {
    try {
      validate(e->id_model);
      validate(e->ood_model);
    } catch (const Error& err) {
      throw ConfigError(std::string("dataset: ") + err.what());
    }
    if (e->id_count < 10) throw ConfigError("dataset.id_count must be >= 10");
  } else {
    const auto& t = std::get<TuSource>(config.dataset);
    if (t.id_name.empty() || t.ood_name.empty()) {
      throw ConfigError("dataset: TU source needs id_name and ood_name");
    }
  }
  if (!(config.lanczos.tol > 0.0)) throw ConfigError("lanczos.tol must be > 0");
  if (!(config.lanczos.residual_tol > 0.0)) {
    throw ConfigError("lanczos.residual_tol must be > 0");
  }
  if (config.adjust.num_eigenpairs == 0) {
    throw ConfigError("adjust.num_eigenpairs must be >= 1");
  }
  if (config.embed.num_layers == 0 || config.embed.hidden_dim == 0) {
    throw ConfigError("embed.num_layers and embed.hidden_dim must be >= 1");
  }
  if (config.embed.adjust_position.kind == AdjustPosition::Kind::kAfterLayer &&
      config.embed.adjust_position.layer > config.embed.num_layers) {
    throw ConfigError("embed.position: layer " +
                      std::to_string(config.embed.adjust_position.layer) +
                      " exceeds num_layers");
  }
  if (config.scorer.kind == ScorerConfig::Kind::kLOF && config.scorer.lof_k == 0) {
    throw ConfigError("scorer.k must be >= 1");
  }
  if (config.threads == 0) throw ConfigError("threads must be >= 1");
}

EvalReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  EvalReport report;
  report.name = config.name;
  const bool adjusting = config.embed.adjust_position.kind != AdjustPosition::Kind::kNone;
  report.method = std::string(to_string(config.scorer.kind)) + "+" +
                  (adjusting ? std::string(to_string(config.adjust.gap_mode)) : "none");
  LapTimer timer;

  auto [id_set, ood_set] = stage("ingest", [&] {
    if (const auto* e = std::get_if<EnsembleSource>(&config.dataset)) {
      return std::pair{
          generate({e->id_model, e->id_count, derive_seed(config.master_seed, kIdEnsembleStream)}),
          generate({e->ood_model, e->ood_count,
                    derive_seed(config.master_seed, kOodEnsembleStream)})};
    }
    const auto& t = std::get<TuSource>(config.dataset);
    return std::pair{parse_tu_dataset(t.id_dir, t.id_name),
                     parse_tu_dataset(t.ood_dir, t.ood_name)};
  });
  timer.lap("ingest", report.runtime_ms);

  const GraphCollection data = stage("split", [&] {
    return split_id_ood(id_set, ood_set, derive_seed(config.master_seed, kSplitStream));
  });
  timer.lap("split", report.runtime_ms);

  const std::size_t n = data.size();
  const std::size_t k = std::max<std::size_t>(2, config.adjust.num_eigenpairs);
  std::vector<SpectralSummary> spectra(n);
  stage("spectrum", [&] {
    const std::uint64_t base = derive_seed(config.master_seed, kLanczosStream);
    parallel_for(n, config.threads, [&](std::size_t i) {
      const Graph& g = data.graphs[i];
      if (g.num_nodes() < 2) {
        throw UndefinedError("graph " + std::to_string(data.graph_ids[i]) +
                             " has fewer than 2 nodes");
      }
      LanczosConfig cfg = config.lanczos;
      cfg.k = std::min(k, g.num_nodes());
      cfg.seed = derive_seed(base, i);
      try {
        spectra[i] = lanczos_top_k(laplacian(g, config.variant), cfg);
      } catch (const std::exception& e) {
        throw Error("graph " + std::to_string(data.graph_ids[i]) + ": " + e.what());
      }
    });
    return 0;
  });
  timer.lap("spectrum", report.runtime_ms);

  std::vector<double> scores(n);
  std::vector<char> scored(n, 0);
  if (config.scorer.kind == ScorerConfig::Kind::kGapThreshold) {
    timer.lap("adjust", report.runtime_ms);
    timer.lap("embed", report.runtime_ms);
    stage("score", [&] {
      std::vector<double> val_id, val_ood;
      for (std::size_t i = 0; i < n; ++i) {
        if (data.split[i] != Split::kVal) continue;
        const double g = spectral_gap(spectra[i]);
        (data.dist_label[i] == DistLabel::kID ? val_id : val_ood).push_back(g);
      }
      report.tau = choose_tau(val_id, val_ood);
      for (std::size_t i = 0; i < n; ++i) {
        if (data.split[i] != Split::kTest) continue;
        scores[i] = oriented_gap_score(spectral_gap(spectra[i]),
                                       report.tau->orientation);
        scored[i] = 1;
      }
      return 0;
    });
    timer.lap("score", report.runtime_ms);
  } else {
    EmbedConfig ecfg = config.embed;
    ecfg.weight_seed = derive_seed(config.master_seed, kWeightStream);
    if (config.auto_features) {
      ecfg.feature_init = all_have_attributes(data) ? FeatureInit::node_attributes()
                                                    : FeatureInit::degree_scalar();
    }
    const bool pre_adjust = adjusting &&
                            ecfg.adjust_position.kind == AdjustPosition::Kind::kAfterLayer &&
                            ecfg.adjust_position.layer == 0;

    std::vector<FeatureMatrix> x0(n);
    stage("adjust", [&] {
      parallel_for(n, config.threads, [&](std::size_t i) {
        x0[i] = init_node_features(data.graphs[i], ecfg.feature_init);
        if (pre_adjust) x0[i] = adjust_features(x0[i], spectra[i], config.adjust);
      });
      return 0;
    });
    timer.lap("adjust", report.runtime_ms);

    Eigen::MatrixXd embeds;
    stage("embed", [&] {
      const std::size_t width = static_cast<std::size_t>(x0[0].cols());
      EmbedConfig run_cfg = ecfg;
      std::optional<AdjustConfig> adj;
      if (pre_adjust || !adjusting) {
        run_cfg.adjust_position = AdjustPosition::none();
      } else {
        adj = config.adjust;
      }
      const Embedder embedder(run_cfg, width, adj);
      embeds.resize(static_cast<Eigen::Index>(n),
                    static_cast<Eigen::Index>(embedder.output_dim()));
      parallel_for(n, config.threads, [&](std::size_t i) {
        const GraphEmbedding e =
            embedder.embed(data.graphs[i], x0[i], adj ? &spectra[i] : nullptr);
        embeds.row(static_cast<Eigen::Index>(i)) = e.vector.transpose();
      });
      return 0;
    });
    timer.lap("embed", report.runtime_ms);

    stage("score", [&] {
      const Eigen::MatrixXd train = rows_where(embeds, data, Split::kTrain);
      const Eigen::MatrixXd test = rows_where(embeds, data, Split::kTest);
      const std::vector<double> s =
          config.scorer.kind == ScorerConfig::Kind::kSSD
              ? ssd_scores(train, test)
              : lof_scores(train, test, config.scorer.lof_k);
      std::size_t r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (data.split[i] != Split::kTest) continue;
        scores[i] = s[r++];
        scored[i] = 1;
      }
      return 0;
    });
    timer.lap("score", report.runtime_ms);
  }

  stage("metrics", [&] {
    for (std::size_t i = 0; i < n; ++i) {
      if (scored[i]) report.scores.push_back({scores[i], data.dist_label[i], data.graph_ids[i]});
    }
    report.metrics = evaluate(report.scores);
    return 0;
  });
  timer.lap("metrics", report.runtime_ms);
  report.total_ms = timer.total();
  return report;
}

GraphModel parse_model_spec(std::string_view spec) {
  const auto parts = split_on(spec, ':');
  const std::string_view kind = parts[0];
  if (kind == "er" && parts.size() == 3) {
    return GraphModel{ErdosRenyi{parse_count(parts[1], spec), parse_real(parts[2], spec)}};
  }
  if (kind == "sbm" && parts.size() == 4) {
    StochasticBlock m;
    for (auto s : split_on(parts[1], ',')) m.block_sizes.push_back(parse_count(s, spec));
    m.p_in = parse_real(parts[2], spec);
    m.p_out = parse_real(parts[3], spec);
    return GraphModel{m};
  }
  if (kind == "regular" && parts.size() == 3) {
    return GraphModel{RandomRegular{parse_count(parts[1], spec), parse_count(parts[2], spec)}};
  }
  if (kind == "rewired" && parts.size() >= 3) {
    const auto rest = spec.substr(parts[0].size() + parts[1].size() + 2);
    return rewired(parse_model_spec(rest), parse_real(parts[1], spec));
  }
  throw ConfigError("bad model spec '" + std::string(spec) +
                    "' (expected er:N:P, sbm:S1,S2:P_IN:P_OUT, regular:N:D or "
                    "rewired:F:<model>)");
}

AdjustPosition parse_adjust_position(std::string_view text) {
  if (text == "none") return AdjustPosition::none();
  if (text == "output") return AdjustPosition::output();
  if (text.starts_with("after_layer:")) {
    return AdjustPosition::after_layer(parse_count(text.substr(12), text));
  }
  throw ConfigError("bad adjust position '" + std::string(text) +
                    "' (expected none|output|after_layer:L)");
}

std::string to_string(const AdjustPosition& position) {
  switch (position.kind) {
    case AdjustPosition::Kind::kNone:
      return "none";
    case AdjustPosition::Kind::kOutput:
      return "output";
    case AdjustPosition::Kind::kAfterLayer:
      return "after_layer:" + std::to_string(position.layer);
  }
  return "none";
}

FeatureInit parse_feature_init(std::string_view text) {
  if (text == "degree_scalar") return FeatureInit::degree_scalar();
  if (text == "constant") return FeatureInit::constant_one();
  if (text == "attributes") return FeatureInit::node_attributes();
  if (text.starts_with("degree_onehot:")) {
    return FeatureInit::degree_one_hot(parse_count(text.substr(14), text));
  }
  throw ConfigError("bad feature init '" + std::string(text) +
                    "' (expected degree_scalar|degree_onehot:D|constant|attributes)");
}

std::string to_string(const FeatureInit& init) {
  switch (init.kind) {
    case FeatureInit::Kind::kDegreeScalar:
      return "degree_scalar";
    case FeatureInit::Kind::kDegreeOneHot:
      return "degree_onehot:" + std::to_string(init.max_degree);
    case FeatureInit::Kind::kConstantOne:
      return "constant";
    case FeatureInit::Kind::kNodeAttributes:
      return "attributes";
  }
  return "degree_scalar";
}

Projection parse_projection(std::string_view text) {
  if (text == "eigenvector") return Projection::eigenvector();
  if (text == "none") return Projection::none();
  if (text.starts_with("random:")) return Projection::random(parse_count(text.substr(7), text));
  if (text == "random") return Projection::random(0);
  throw ConfigError("bad projection '" + std::string(text) +
                    "' (expected eigenvector|random:SEED|none)");
}

std::string to_string(const Projection& projection) {
  switch (projection.kind) {
    case Projection::Kind::kEigenvector:
      return "eigenvector";
    case Projection::Kind::kNone:
      return "none";
    case Projection::Kind::kRandom:
      return "random:" + std::to_string(projection.seed);
  }
  return "eigenvector";
}

}  // namespace specgap

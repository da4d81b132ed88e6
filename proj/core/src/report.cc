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

#include "specgap/report.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "specgap/error.h"
#include "text_io.h"

namespace specgap {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(what, 0, e.what());
  }
}

// Field access with a uniform ParseError.
template <typename T>
T get(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(what, 0, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(what, 0, std::string("field '") + key + "': " + e.what());
  }
}

// Reals allow null for NaN.
Json real(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

double get_real(const Json& v, const char* what) {
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!v.is_number()) throw ParseError(what, 0, "expected a number");
  return v.get<double>();
}

double get_real(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(what, 0, std::string("missing field '") + key + "'");
  }
  return get_real(j.at(key), what);
}

Json reals(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(real(x));
  return a;
}

std::vector<double> get_reals(const Json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(what, 0, std::string("field '") + key + "' must be an array");
  }
  std::vector<double> out;
  for (const auto& x : j.at(key)) out.push_back(get_real(x, what));
  return out;
}

DistLabel parse_dist_label(std::string_view s) {
  if (s == "ID") return DistLabel::kID;
  if (s == "OOD") return DistLabel::kOOD;
  throw ParseError("report", 0, "bad label '" + std::string(s) + "'");
}

// Enum parsers throw ConfigError; inside documents that becomes a
// ParseError.
template <typename F>
auto wrap(const char* what, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(what, 0, e.what());
  }
}

Json model_to_json(const GraphModel& model) {
  return std::visit(
      [](const auto& m) -> Json {
        using T = std::decay_t<decltype(m)>;
        Json j;
        if constexpr (std::is_same_v<T, ErdosRenyi>) {
          j["type"] = "er";
          j["n"] = m.n;
          j["p"] = m.p;
        } else if constexpr (std::is_same_v<T, StochasticBlock>) {
          j["type"] = "sbm";
          j["block_sizes"] = m.block_sizes;
          j["p_in"] = m.p_in;
          j["p_out"] = m.p_out;
        } else if constexpr (std::is_same_v<T, RandomRegular>) {
          j["type"] = "regular";
          j["n"] = m.n;
          j["d"] = m.d;
        } else {
          j["type"] = "rewired";
          j["base"] = model_to_json(*m.base);
          j["fraction"] = m.rewire_fraction;
        }
        return j;
      },
      model.kind);
}

GraphModel model_from_json(const Json& j, const char* what) {
  if (j.is_string()) return wrap(what, [&] { return parse_model_spec(j.get<std::string>()); });
  const auto type = get<std::string>(j, "type", what);
  if (type == "er") return GraphModel{ErdosRenyi{get<std::size_t>(j, "n", what), get<double>(j, "p", what)}};
  if (type == "sbm") {
    return GraphModel{StochasticBlock{get<std::vector<std::size_t>>(j, "block_sizes", what),
                                      get<double>(j, "p_in", what), get<double>(j, "p_out", what)}};
  }
  if (type == "regular") {
    return GraphModel{RandomRegular{get<std::size_t>(j, "n", what), get<std::size_t>(j, "d", what)}};
  }
  if (type == "rewired") {
    return rewired(model_from_json(j.at("base"), what), get<double>(j, "fraction", what));
  }
  throw ParseError(what, 0, "unknown model type '" + type + "'");
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw ParseError(what, 0, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw ParseError(what, 0, "unknown field '" + k + "'");
  }
}

}  // namespace

std::string to_json(const EvalReport& r, bool include_timings) {
  Json j;
  j["name"] = r.name;
  j["method"] = r.method;
  j["auc"] = r.metrics.auc;
  j["aupr"] = r.metrics.aupr;
  j["fpr95"] = r.metrics.fpr95;
  j["num_id"] = r.metrics.num_id;
  j["num_ood"] = r.metrics.num_ood;
  if (r.tau) {
    j["tau"] = {{"tau", real(r.tau->tau)},
                {"orientation", to_string(r.tau->orientation)},
                {"empirical_error", r.tau->empirical_error}};
  }
  if (include_timings) {
    Json t = Json::object();
    for (const auto& s : r.runtime_ms) t[s.stage] = s.ms;
    j["runtime_ms"] = t;
    j["total_ms"] = r.total_ms;
  }
  Json scores = Json::array();
  for (const auto& s : r.scores) {
    scores.push_back({{"graph_id", s.graph_id},
                      {"label", to_string(s.true_label)},
                      {"score", s.score}});
  }
  j["scores"] = scores;
  return dump(j);
}

EvalReport parse_eval_report(std::string_view text) {
  const char* what = "eval report";
  const Json j = parse_json(text, what);
  EvalReport r;
  r.name = get<std::string>(j, "name", what);
  r.method = get<std::string>(j, "method", what);
  r.metrics.auc = get_real(j, "auc", what);
  r.metrics.aupr = get_real(j, "aupr", what);
  r.metrics.fpr95 = get_real(j, "fpr95", what);
  r.metrics.num_id = get<std::size_t>(j, "num_id", what);
  r.metrics.num_ood = get<std::size_t>(j, "num_ood", what);
  if (j.contains("tau")) {
    const Json& t = j.at("tau");
    r.tau = TauChoice{get_real(t, "tau", what),
                      wrap(what, [&] {
                        return parse_gap_orientation(get<std::string>(t, "orientation", what));
                      }),
                      get_real(t, "empirical_error", what)};
  }
  if (j.contains("runtime_ms")) {
    for (const auto& [k, v] : j.at("runtime_ms").items()) {
      r.runtime_ms.push_back({k, get_real(v, what)});
    }
    r.total_ms = get_real(j, "total_ms", what);
  }
  for (const auto& s : get<Json>(j, "scores", what)) {
    r.scores.push_back({get_real(s, "score", what),
                        parse_dist_label(get<std::string>(s, "label", what)),
                        get<std::size_t>(s, "graph_id", what)});
  }
  return r;
}

void write_scores_csv(const EvalReport& report, std::ostream& out) {
  out << "graph_id,true_label,score\n";
  for (const auto& s : report.scores) {
    out << s.graph_id << ',' << to_string(s.true_label) << ','
        << text::format_double(s.score) << '\n';
  }
}

std::string to_json(const SpectralSummary& s) {
  Json j;
  j["eigenvalues"] = reals(s.eigenvalues);
  j["iterations_used"] = s.iterations_used;
  j["restarts"] = s.restarts;
  j["converged"] = s.converged;
  j["residual_norms"] = reals(s.residual_norms);
  j["orthogonality_loss"] = s.orthogonality_loss;
  Json hist = Json::array();
  for (const auto& row : s.ritz_history) hist.push_back(reals(row));
  j["ritz_history"] = hist;
  Json vecs = Json::array();
  for (Eigen::Index c = 0; c < s.eigenvectors.cols(); ++c) {
    Json col = Json::array();
    for (Eigen::Index r = 0; r < s.eigenvectors.rows(); ++r) col.push_back(s.eigenvectors(r, c));
    vecs.push_back(col);
  }
  j["eigenvectors"] = vecs;
  return dump(j);
}

SpectralSummary parse_spectrum(std::string_view text) {
  const char* what = "spectrum";
  const Json j = parse_json(text, what);
  SpectralSummary s;
  s.eigenvalues = get_reals(j, "eigenvalues", what);
  s.iterations_used = get<std::size_t>(j, "iterations_used", what);
  s.restarts = get<std::size_t>(j, "restarts", what);
  s.converged = get<bool>(j, "converged", what);
  s.residual_norms = get_reals(j, "residual_norms", what);
  s.orthogonality_loss = get_real(j, "orthogonality_loss", what);
  for (const auto& row : get<Json>(j, "ritz_history", what)) {
    std::vector<double> v;
    for (const auto& x : row) v.push_back(get_real(x, what));
    s.ritz_history.push_back(std::move(v));
  }
  const Json vecs = get<Json>(j, "eigenvectors", what);
  if (vecs.size() != s.eigenvalues.size()) {
    throw ParseError(what, 0, "eigenvector count differs from eigenvalue count");
  }
  const std::size_t dim = vecs.empty() ? 0 : vecs[0].size();
  s.eigenvectors.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t c = 0; c < vecs.size(); ++c) {
    if (vecs[c].size() != dim) throw ParseError(what, 0, "ragged eigenvector columns");
    for (std::size_t r = 0; r < dim; ++r) {
      s.eigenvectors(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          get_real(vecs[c][r], what);
    }
  }
  return s;
}

std::string to_json(const GapDistributionReport& r) {
  Json j;
  j["label"] = r.label;
  j["variant"] = to_string(r.variant);
  j["num_graphs"] = r.gaps.size();
  j["mean"] = real(r.mean);
  j["variance"] = real(r.variance);
  j["ratio_mean"] = real(r.ratio_mean);
  j["unconverged"] = r.unconverged;
  j["histogram"] = {{"edges", reals(r.histogram.edges)}, {"counts", r.histogram.counts}};
  j["gaps"] = reals(r.gaps);
  j["ratios"] = reals(r.ratios);
  j["lambda_max"] = reals(r.lambda_max);
  return dump(j);
}

GapDistributionReport parse_gap_report(std::string_view text) {
  const char* what = "gap report";
  const Json j = parse_json(text, what);
  GapDistributionReport r;
  r.label = get<std::string>(j, "label", what);
  r.variant = wrap(what, [&] { return parse_laplacian_variant(get<std::string>(j, "variant", what)); });
  r.mean = get_real(j, "mean", what);
  r.variance = get_real(j, "variance", what);
  r.ratio_mean = get_real(j, "ratio_mean", what);
  r.unconverged = get<std::size_t>(j, "unconverged", what);
  const Json h = get<Json>(j, "histogram", what);
  r.histogram.edges = get_reals(h, "edges", what);
  r.histogram.counts = get<std::vector<std::size_t>>(h, "counts", what);
  r.gaps = get_reals(j, "gaps", what);
  r.ratios = get_reals(j, "ratios", what);
  r.lambda_max = get_reals(j, "lambda_max", what);
  if (get<std::size_t>(j, "num_graphs", what) != r.gaps.size()) {
    throw ParseError(what, 0, "num_graphs does not match the gap list");
  }
  return r;
}

std::string to_json(const GainReport& r) {
  Json j;
  j["num_pairs"] = r.num_pairs;
  j["bootstrap_resamples"] = r.bootstrap_resamples;
  j["mean_sep_adjusted"] = r.mean_sep_adjusted;
  j["mean_sep_raw"] = r.mean_sep_raw;
  j["gamma_hat"] = r.gamma_hat;
  j["ci95_low"] = r.ci95_low;
  j["ci95_high"] = r.ci95_high;
  j["ci95_halfwidth"] = r.ci95_halfwidth;
  j["pair_gains"] = reals(r.pair_gains);
  return dump(j);
}

GainReport parse_gain_report(std::string_view text) {
  const char* what = "gain report";
  const Json j = parse_json(text, what);
  GainReport r;
  r.num_pairs = get<std::size_t>(j, "num_pairs", what);
  r.bootstrap_resamples = get<std::size_t>(j, "bootstrap_resamples", what);
  r.mean_sep_adjusted = get_real(j, "mean_sep_adjusted", what);
  r.mean_sep_raw = get_real(j, "mean_sep_raw", what);
  r.gamma_hat = get_real(j, "gamma_hat", what);
  r.ci95_low = get_real(j, "ci95_low", what);
  r.ci95_high = get_real(j, "ci95_high", what);
  r.ci95_halfwidth = get_real(j, "ci95_halfwidth", what);
  r.pair_gains = get_reals(j, "pair_gains", what);
  return r;
}

std::string to_json(const ExperimentConfig& c) {
  Json j;
  j["name"] = c.name;
  j["master_seed"] = c.master_seed;
  j["threads"] = c.threads;
  j["variant"] = to_string(c.variant);
  if (const auto* e = std::get_if<EnsembleSource>(&c.dataset)) {
    j["dataset"] = {{"kind", "ensemble"},
                    {"id_model", model_to_json(e->id_model)},
                    {"ood_model", model_to_json(e->ood_model)},
                    {"id_count", e->id_count},
                    {"ood_count", e->ood_count}};
  } else {
    const auto& t = std::get<TuSource>(c.dataset);
    j["dataset"] = {{"kind", "tu"},
                    {"id_dir", t.id_dir.generic_string()},
                    {"id_name", t.id_name},
                    {"ood_dir", t.ood_dir.generic_string()},
                    {"ood_name", t.ood_name}};
  }
  j["lanczos"] = {{"tol", c.lanczos.tol},
                  {"max_iter", c.lanczos.max_iter},
                  {"max_restarts", c.lanczos.max_restarts},
                  {"residual_tol", c.lanczos.residual_tol},
                  {"full_reorth", c.lanczos.full_reorth}};
  j["adjust"] = {{"gap_mode", to_string(c.adjust.gap_mode)},
                 {"combine_mode", to_string(c.adjust.combine_mode)},
                 {"num_eigenpairs", c.adjust.num_eigenpairs},
                 {"projection", to_string(c.adjust.projection)}};
  j["embed"] = {{"num_layers", c.embed.num_layers},
                {"hidden_dim", c.embed.hidden_dim},
                {"activation", to_string(c.embed.activation)},
                {"readout", to_string(c.embed.readout)},
                {"position", to_string(c.embed.adjust_position)},
                {"features", c.auto_features ? std::string("auto") : to_string(c.embed.feature_init)}};
  j["scorer"] = {{"kind", to_string(c.scorer.kind)}, {"k", c.scorer.lof_k}};
  return dump(j);
}

ExperimentConfig parse_experiment_config(std::string_view text,
                                         const std::filesystem::path& base_dir) {
  const char* what = "config";
  const Json j = parse_json(text, what);
  reject_unknown(j, {"name", "master_seed", "threads", "variant", "dataset", "lanczos",
                     "adjust", "embed", "scorer"},
                 what);
  ExperimentConfig c;
  auto opt = [&](const Json& obj, const char* key, auto& field) {
    if (obj.contains(key)) field = get<std::decay_t<decltype(field)>>(obj, key, what);
  };
  opt(j, "name", c.name);
  opt(j, "master_seed", c.master_seed);
  opt(j, "threads", c.threads);
  if (j.contains("variant")) {
    c.variant = wrap(what, [&] { return parse_laplacian_variant(get<std::string>(j, "variant", what)); });
  }
  if (j.contains("dataset")) {
    const Json& d = j.at("dataset");
    const auto kind = get<std::string>(d, "kind", what);
    if (kind == "ensemble") {
      reject_unknown(d, {"kind", "id_model", "ood_model", "id_count", "ood_count"}, what);
      EnsembleSource e;
      e.id_model = model_from_json(get<Json>(d, "id_model", what), what);
      e.ood_model = model_from_json(get<Json>(d, "ood_model", what), what);
      opt(d, "id_count", e.id_count);
      e.ood_count = e.id_count;
      opt(d, "ood_count", e.ood_count);
      c.dataset = e;
    } else if (kind == "tu") {
      reject_unknown(d, {"kind", "id_dir", "id_name", "ood_dir", "ood_name"}, what);
      TuSource t;
      auto dir = [&](const char* key) {
        std::filesystem::path p = d.contains(key) ? get<std::string>(d, key, what) : ".";
        return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
      };
      t.id_dir = dir("id_dir");
      t.ood_dir = d.contains("ood_dir") ? dir("ood_dir") : t.id_dir;
      t.id_name = get<std::string>(d, "id_name", what);
      t.ood_name = get<std::string>(d, "ood_name", what);
      c.dataset = t;
    } else {
      throw ParseError(what, 0, "dataset.kind must be 'ensemble' or 'tu'");
    }
  }
  if (j.contains("lanczos")) {
    const Json& l = j.at("lanczos");
    reject_unknown(l, {"tol", "max_iter", "max_restarts", "residual_tol", "full_reorth"}, what);
    opt(l, "tol", c.lanczos.tol);
    opt(l, "max_iter", c.lanczos.max_iter);
    opt(l, "max_restarts", c.lanczos.max_restarts);
    opt(l, "residual_tol", c.lanczos.residual_tol);
    opt(l, "full_reorth", c.lanczos.full_reorth);
  }
  if (j.contains("adjust")) {
    const Json& a = j.at("adjust");
    reject_unknown(a, {"gap_mode", "combine_mode", "num_eigenpairs", "projection"}, what);
    wrap(what, [&] {
      if (a.contains("gap_mode")) c.adjust.gap_mode = parse_gap_mode(get<std::string>(a, "gap_mode", what));
      if (a.contains("combine_mode")) {
        c.adjust.combine_mode = parse_combine_mode(get<std::string>(a, "combine_mode", what));
      }
      if (a.contains("projection")) {
        c.adjust.projection = parse_projection(get<std::string>(a, "projection", what));
      }
      return 0;
    });
    opt(a, "num_eigenpairs", c.adjust.num_eigenpairs);
  }
  if (j.contains("embed")) {
    const Json& e = j.at("embed");
    reject_unknown(e, {"num_layers", "hidden_dim", "activation", "readout", "position", "features"},
                   what);
    opt(e, "num_layers", c.embed.num_layers);
    opt(e, "hidden_dim", c.embed.hidden_dim);
    wrap(what, [&] {
      if (e.contains("activation")) {
        c.embed.activation = parse_activation(get<std::string>(e, "activation", what));
      }
      if (e.contains("readout")) c.embed.readout = parse_readout(get<std::string>(e, "readout", what));
      if (e.contains("position")) {
        c.embed.adjust_position = parse_adjust_position(get<std::string>(e, "position", what));
      }
      if (e.contains("features")) {
        const auto f = get<std::string>(e, "features", what);
        c.auto_features = f == "auto";
        if (!c.auto_features) c.embed.feature_init = parse_feature_init(f);
      }
      return 0;
    });
  }
  if (j.contains("scorer")) {
    const Json& s = j.at("scorer");
    reject_unknown(s, {"kind", "k"}, what);
    if (s.contains("kind")) {
      c.scorer.kind = wrap(what, [&] { return parse_scorer_kind(get<std::string>(s, "kind", what)); });
    }
    opt(s, "k", c.scorer.lof_k);
  }
  return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& file) {
  try {
    return parse_experiment_config(read_text_file(file), file.parent_path());
  } catch (const ParseError& e) {
    if (e.file() == "config") throw ParseError(file.string(), e.line(), e.what());
    throw;
  }
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in = text::open_input(file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& file, std::string_view content) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace specgap

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
#include <filesystem>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "specgap/error.h"

namespace specgap {
namespace {

EvalReport sample_report() {
  EvalReport r;
  r.name = "demo";
  r.method = "gap_threshold+scaled_subtraction";
  r.metrics = {0.8125, 0.7333333333333333, 0.1, 10, 10};
  r.tau = TauChoice{1.2345678901234567, GapOrientation::kGapHighMeansOOD, 0.15};
  r.runtime_ms = {{"ingest", 1.5}, {"split", 0.25}};
  r.total_ms = 1.75;
  for (std::size_t i = 0; i < 5; ++i)
    r.scores.push_back({0.1 * static_cast<double>(i) - 0.3,
                        i % 2 ? DistLabel::kOOD : DistLabel::kID, 100 + i});
  return r;
}

TEST(EvalReportJson, RoundTripWithTimings) {
  const EvalReport r = sample_report();
  EXPECT_EQ(parse_eval_report(to_json(r, true)), r);
}

TEST(EvalReportJson, TimingsOmittedByDefault) {
  const EvalReport r = sample_report();
  const std::string text = to_json(r);
  EXPECT_EQ(text.find("runtime_ms"), std::string::npos);
  EvalReport expected = r;
  expected.runtime_ms.clear();
  expected.total_ms = 0.0;
  EXPECT_EQ(parse_eval_report(text), expected);
  EXPECT_EQ(to_json(parse_eval_report(text)), text);
}

TEST(EvalReportJson, NanMetricWrittenAsNull) {
  EvalReport r = sample_report();
  r.tau.reset();
  r.metrics.aupr = std::numeric_limits<double>::quiet_NaN();
  const std::string text = to_json(r);
  EXPECT_NE(text.find("\"aupr\": null"), std::string::npos) << text;
  EXPECT_TRUE(std::isnan(parse_eval_report(text).metrics.aupr));
  EXPECT_FALSE(parse_eval_report(text).tau.has_value());
}

TEST(EvalReportJson, MalformedInputRejected) {
  EXPECT_THROW(parse_eval_report("{"), Error);
  EXPECT_THROW(parse_eval_report("[]"), Error);
}

TEST(ScoresCsv, HeaderAndRows) {
  std::ostringstream out;
  write_scores_csv(sample_report(), out);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("graph_id,true_label,score\n", 0), 0u);
  EXPECT_NE(text.find("101,OOD,"), std::string::npos);
}

TEST(SpectrumJson, RoundTrip) {
  SpectralSummary s;
  s.eigenvalues = {4.5, 3.25};
  s.eigenvectors = Eigen::MatrixXd::Random(5, 2);
  s.iterations_used = 17;
  s.restarts = 1;
  s.converged = true;
  s.residual_norms = {1e-12, 3e-11};
  const SpectralSummary b = parse_spectrum(to_json(s));
  EXPECT_EQ(b.eigenvalues, s.eigenvalues);
  EXPECT_EQ(b.eigenvectors, s.eigenvectors);
  EXPECT_EQ(b.iterations_used, 17u);
  EXPECT_EQ(b.restarts, 1u);
  EXPECT_TRUE(b.converged);
  EXPECT_EQ(b.residual_norms, s.residual_norms);
}

TEST(GapReportJson, RoundTrip) {
  GapDistributionReport r;
  r.label = "er(30,0.5)";
  r.variant = LaplacianVariant::kSignless;
  r.gaps = {0.5, 1.5};
  r.ratios = {0.1, std::numeric_limits<double>::quiet_NaN()};
  r.lambda_max = {5, 6};
  r.mean = 1.0;
  r.variance = 0.5;
  r.ratio_mean = 0.1;
  r.histogram = make_histogram(r.gaps, 2);
  const GapDistributionReport b = parse_gap_report(to_json(r));
  EXPECT_EQ(b.label, r.label);
  EXPECT_EQ(b.variant, r.variant);
  EXPECT_EQ(b.gaps, r.gaps);
  EXPECT_EQ(b.ratios[0], 0.1);
  EXPECT_TRUE(std::isnan(b.ratios[1]));
  EXPECT_EQ(b.histogram.edges, r.histogram.edges);
  EXPECT_EQ(b.histogram.counts, r.histogram.counts);
  EXPECT_EQ(to_json(b), to_json(r));
}

TEST(GainReportJson, RoundTrip) {
  GainReport r;
  r.mean_sep_adjusted = 2.0;
  r.mean_sep_raw = 1.5;
  r.gamma_hat = 0.5;
  r.ci95_low = 0.25;
  r.ci95_high = 0.75;
  r.ci95_halfwidth = 0.25;
  r.num_pairs = 3;
  r.bootstrap_resamples = 10;
  r.pair_gains = {0.1, 0.5, 0.9};
  const GainReport b = parse_gain_report(to_json(r));
  EXPECT_EQ(b.gamma_hat, r.gamma_hat);
  EXPECT_EQ(b.pair_gains, r.pair_gains);
  EXPECT_EQ(to_json(b), to_json(r));
}

TEST(ConfigJson, RoundTripEnsemble) {
  ExperimentConfig c;
  c.name = "cfg";
  c.dataset = EnsembleSource{parse_model_spec("sbm:5,6:0.7:0.1"),
                             parse_model_spec("rewired:0.25:regular:10:3"), 40, 30};
  c.variant = LaplacianVariant::kNormalized;
  c.lanczos.tol = 1e-9;
  c.adjust.gap_mode = GapMode::kRelativeDifference;
  c.adjust.projection = Projection::random(99);
  c.embed.adjust_position = AdjustPosition::output();
  c.embed.feature_init = FeatureInit::degree_one_hot(7);
  c.auto_features = false;
  c.scorer = {ScorerConfig::Kind::kLOF, 5};
  c.master_seed = 123456789012345ull;
  c.threads = 2;
  EXPECT_EQ(parse_experiment_config(to_json(c)), c);
}

TEST(ConfigJson, RoundTripTuAndDefaults) {
  ExperimentConfig c;
  c.dataset = TuSource{"/data/a", "A", "/data/b", "B"};
  EXPECT_EQ(parse_experiment_config(to_json(c)), c);
  EXPECT_EQ(parse_experiment_config("{}"), ExperimentConfig{});
}

TEST(ConfigJson, RelativeDirectoriesResolveAgainstBase) {
  const ExperimentConfig c = parse_experiment_config(
      R"({"dataset": {"kind": "tu", "id_dir": "x", "id_name": "X", "ood_dir": "/abs", "ood_name": "Y"}})",
      "/base");
  const auto& tu = std::get<TuSource>(c.dataset);
  EXPECT_EQ(tu.id_dir, std::filesystem::path("/base/x"));
  EXPECT_EQ(tu.ood_dir, std::filesystem::path("/abs"));
}

TEST(ConfigJson, UnknownKeysAndBadValuesRejected) {
  EXPECT_THROW(parse_experiment_config(R"({"sed": 1})"), ParseError);
  EXPECT_THROW(parse_experiment_config(R"({"scorer": {"kind": "knn"}})"), Error);
  EXPECT_THROW(parse_experiment_config(R"({"lanczos": {"tol": "small"}})"), Error);
  EXPECT_THROW(parse_experiment_config(R"({"embed": {"position": "after_layer:x"}})"), Error);
}

TEST(TextFile, WriteThenRead) {
  const auto p = std::filesystem::temp_directory_path() / "specgap_report_text.json";
  write_text_file(p, "abc\n");
  EXPECT_EQ(read_text_file(p), "abc\n");
  std::filesystem::remove(p);
}

}  // namespace
}  // namespace specgap

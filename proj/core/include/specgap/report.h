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

#ifndef SPECGAP_REPORT_H_
#define SPECGAP_REPORT_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "specgap/experiment.h"
#include "specgap/lanczos.h"
#include "specgap/synth.h"

namespace specgap {

// JSON documents with a fixed field order, two-space indent and a trailing
// newline. Doubles print in shortest round-trip form; NaN prints as null.
// Every parse_* throws ParseError on malformed input and inverts the
// matching *_to_json exactly.

// Runtimes are machine-dependent, so they are left out unless requested;
// without them two runs with one seed give byte-identical files.
std::string to_json(const EvalReport& report, bool include_timings = false);
EvalReport parse_eval_report(std::string_view json);

// graph_id,true_label,score rows for the test split.
void write_scores_csv(const EvalReport& report, std::ostream& out);

std::string to_json(const SpectralSummary& summary);
SpectralSummary parse_spectrum(std::string_view json);

std::string to_json(const GapDistributionReport& report);
GapDistributionReport parse_gap_report(std::string_view json);

std::string to_json(const GainReport& report);
GainReport parse_gain_report(std::string_view json);

// Missing fields take the defaults of ExperimentConfig. Relative TU
// directories are resolved against `base_dir`. Unknown keys are rejected.
std::string to_json(const ExperimentConfig& config);
ExperimentConfig parse_experiment_config(std::string_view json,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& file);

std::string read_text_file(const std::filesystem::path& file);
// Writes through a temporary and renames, so readers never see half a file.
void write_text_file(const std::filesystem::path& file, std::string_view content);

}  // namespace specgap

#endif  // SPECGAP_REPORT_H_

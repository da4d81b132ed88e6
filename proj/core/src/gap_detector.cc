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

#include "specgap/gap_detector.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specgap/error.h"

namespace specgap {

std::string_view to_string(GapOrientation o) {
  return o == GapOrientation::kGapHighMeansID ? "gap_high_means_id"
                                              : "gap_high_means_ood";
}

GapOrientation parse_gap_orientation(std::string_view name) {
  if (name == "gap_high_means_id") return GapOrientation::kGapHighMeansID;
  if (name == "gap_high_means_ood") return GapOrientation::kGapHighMeansOOD;
  throw ConfigError("unknown gap orientation '" + std::string(name) + "'");
}

DistLabel classify_gap(double gap, const GapDetectorConfig& config) {
  const bool above = gap > config.tau;
  if (config.orientation == GapOrientation::kGapHighMeansID) {
    return above ? DistLabel::kID : DistLabel::kOOD;
  }
  return above ? DistLabel::kOOD : DistLabel::kID;
}

std::vector<DistLabel> gap_detect(std::span<const double> gaps,
                                  const GapDetectorConfig& config) {
  std::vector<DistLabel> out;
  out.reserve(gaps.size());
  for (double g : gaps) out.push_back(classify_gap(g, config));
  return out;
}

double oriented_gap_score(double gap, GapOrientation orientation) {
  return orientation == GapOrientation::kGapHighMeansOOD ? gap : -gap;
}

double balanced_error(std::span<const double> id_gaps,
                      std::span<const double> ood_gaps,
                      const GapDetectorConfig& config) {
  std::size_t id_wrong = 0;
  std::size_t ood_wrong = 0;
  for (double g : id_gaps) id_wrong += classify_gap(g, config) != DistLabel::kID;
  for (double g : ood_gaps) ood_wrong += classify_gap(g, config) != DistLabel::kOOD;
  return 0.5 * (static_cast<double>(id_wrong) / static_cast<double>(id_gaps.size()) +
                static_cast<double>(ood_wrong) / static_cast<double>(ood_gaps.size()));
}

std::vector<double> candidate_thresholds(std::span<const double> a,
                                         std::span<const double> b) {
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());
  std::vector<double> out;
  out.reserve(pooled.size() + 1);
  out.push_back(-std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i + 1 < pooled.size(); ++i) {
    out.push_back(pooled[i] + 0.5 * (pooled[i + 1] - pooled[i]));
  }
  out.push_back(std::numeric_limits<double>::infinity());
  return out;
}

TauChoice choose_tau(std::span<const double> id_gaps,
                     std::span<const double> ood_gaps) {
  if (id_gaps.empty() || ood_gaps.empty()) {
    throw InvalidArgument("choose_tau: both gap lists must be non-empty");
  }
  for (double g : id_gaps) {
    if (!std::isfinite(g)) throw InvalidArgument("choose_tau: non-finite gap");
  }
  for (double g : ood_gaps) {
    if (!std::isfinite(g)) throw InvalidArgument("choose_tau: non-finite gap");
  }
  std::vector<double> id_sorted(id_gaps.begin(), id_gaps.end());
  std::vector<double> ood_sorted(ood_gaps.begin(), ood_gaps.end());
  std::sort(id_sorted.begin(), id_sorted.end());
  std::sort(ood_sorted.begin(), ood_sorted.end());
  const double n_id = static_cast<double>(id_sorted.size());
  const double n_ood = static_cast<double>(ood_sorted.size());

  TauChoice best{0.0, GapOrientation::kGapHighMeansID,
                 std::numeric_limits<double>::infinity()};
  for (double tau : candidate_thresholds(id_gaps, ood_gaps)) {
    // Counts of values <= tau.
    const auto id_le = static_cast<std::size_t>(
        std::upper_bound(id_sorted.begin(), id_sorted.end(), tau) - id_sorted.begin());
    const auto ood_le = static_cast<std::size_t>(
        std::upper_bound(ood_sorted.begin(), ood_sorted.end(), tau) -
        ood_sorted.begin());
    const std::size_t id_gt = id_sorted.size() - id_le;
    const std::size_t ood_gt = ood_sorted.size() - ood_le;
    // High-means-ID errs on ID <= tau and OOD > tau; the other way round
    // otherwise.
    const double err_high_id = 0.5 * (static_cast<double>(id_le) / n_id +
                                      static_cast<double>(ood_gt) / n_ood);
    const double err_high_ood = 0.5 * (static_cast<double>(id_gt) / n_id +
                                       static_cast<double>(ood_le) / n_ood);
    if (err_high_id < best.empirical_error) {
      best = {tau, GapOrientation::kGapHighMeansID, err_high_id};
    }
    if (err_high_ood < best.empirical_error) {
      best = {tau, GapOrientation::kGapHighMeansOOD, err_high_ood};
    }
  }
  return best;
}

}  // namespace specgap

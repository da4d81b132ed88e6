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

#ifndef SPECGAP_GAP_DETECTOR_H_
#define SPECGAP_GAP_DETECTOR_H_

#include <span>
#include <string_view>
#include <vector>

#include "specgap/collection.h"

namespace specgap {

enum class GapOrientation { kGapHighMeansID, kGapHighMeansOOD };

std::string_view to_string(GapOrientation o);
GapOrientation parse_gap_orientation(std::string_view name);

// Threshold detector on the spectral gap. There is no default orientation.
struct GapDetectorConfig {
  GapDetectorConfig(double tau, GapOrientation orientation)
      : tau(tau), orientation(orientation) {}
  double tau;
  GapOrientation orientation;
};

// kGapHighMeansID: gap > tau -> ID, otherwise OOD (a tie is OOD).
// kGapHighMeansOOD: gap > tau -> OOD, otherwise ID.
DistLabel classify_gap(double gap, const GapDetectorConfig& config);
std::vector<DistLabel> gap_detect(std::span<const double> gaps,
                                  const GapDetectorConfig& config);

// Monotone OOD score for metrics: gap or -gap depending on orientation.
double oriented_gap_score(double gap, GapOrientation orientation);

// 0.5 * (ID misclassification rate + OOD misclassification rate).
double balanced_error(std::span<const double> id_gaps,
                      std::span<const double> ood_gaps,
                      const GapDetectorConfig& config);

struct TauChoice {
  double tau;
  GapOrientation orientation;
  double empirical_error;
};

// Minimizes balanced_error over tau in {-inf, +inf, midpoints between
// adjacent distinct pooled values} and both orientations. Ties go to the
// smaller tau, then to kGapHighMeansID. Throws InvalidArgument on an empty
// list.
TauChoice choose_tau(std::span<const double> id_gaps,
                     std::span<const double> ood_gaps);

// Candidate thresholds used by choose_tau, ascending.
std::vector<double> candidate_thresholds(std::span<const double> a,
                                         std::span<const double> b);

}  // namespace specgap

#endif  // SPECGAP_GAP_DETECTOR_H_

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

#ifndef SPECGAP_METRICS_H_
#define SPECGAP_METRICS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "specgap/collection.h"

namespace specgap {

struct ScoredSample {
  double score = 0.0;  // higher = more OOD
  DistLabel true_label = DistLabel::kID;
  std::size_t graph_id = 0;
  friend bool operator==(const ScoredSample&, const ScoredSample&) = default;
};

// OOD is the positive class throughout. Each metric throws UndefinedError
// unless both classes are present, and InvalidArgument on a non-finite
// score.

// P(score_OOD > score_ID) + 0.5 P(tie), from midrank statistics.
double auc(std::span<const ScoredSample> samples);

// Area under the precision-recall curve. Scores are swept from high to low
// with equal scores forming one threshold; each recall increment is weighted
// by the precision envelope max_{r' >= r} P(r').
double aupr(std::span<const ScoredSample> samples);

// Smallest false-positive rate over thresholds "score >= t" whose true
// positive rate is at least 95%.
double fpr_at_95tpr(std::span<const ScoredSample> samples);

struct Metrics {
  double auc = 0.0;
  double aupr = 0.0;
  double fpr95 = 0.0;
  std::size_t num_id = 0;
  std::size_t num_ood = 0;
  friend bool operator==(const Metrics&, const Metrics&) = default;
};

Metrics evaluate(std::span<const ScoredSample> samples);

}  // namespace specgap

#endif  // SPECGAP_METRICS_H_

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

#include "specgap/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "specgap/error.h"

namespace specgap {

namespace {

struct Counts {
  std::size_t pos = 0;
  std::size_t neg = 0;
};

// Samples sorted by descending score, validated.
std::vector<ScoredSample> sorted_desc(std::span<const ScoredSample> samples,
                                      Counts& counts) {
  for (const auto& s : samples) {
    if (!std::isfinite(s.score)) throw InvalidArgument("non-finite score");
    if (s.true_label == DistLabel::kOOD) {
      ++counts.pos;
    } else {
      ++counts.neg;
    }
  }
  if (counts.pos == 0 || counts.neg == 0) {
    throw UndefinedError("metric needs at least one ID and one OOD sample");
  }
  std::vector<ScoredSample> v(samples.begin(), samples.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.score > b.score;
  });
  return v;
}

// Cumulative (tp, fp) after each tie group of the descending sweep.
struct Step {
  std::size_t tp;
  std::size_t fp;
};

std::vector<Step> sweep(const std::vector<ScoredSample>& v) {
  std::vector<Step> steps;
  std::size_t tp = 0;
  std::size_t fp = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j].score == v[i].score) {
      if (v[j].true_label == DistLabel::kOOD) {
        ++tp;
      } else {
        ++fp;
      }
      ++j;
    }
    steps.push_back({tp, fp});
    i = j;
  }
  return steps;
}

}  // namespace

double auc(std::span<const ScoredSample> samples) {
  Counts c;
  std::vector<ScoredSample> v = sorted_desc(samples, c);
  // Ascending midranks: the descending position p of a group spanning
  // [i, j) maps to ascending ranks n - j + 1 .. n - i.
  const std::size_t n = v.size();
  double rank_sum_pos = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    std::size_t pos_in_group = 0;
    while (j < n && v[j].score == v[i].score) {
      if (v[j].true_label == DistLabel::kOOD) ++pos_in_group;
      ++j;
    }
    const double lo = static_cast<double>(n - j + 1);
    const double hi = static_cast<double>(n - i);
    rank_sum_pos += static_cast<double>(pos_in_group) * 0.5 * (lo + hi);
    i = j;
  }
  const double np = static_cast<double>(c.pos);
  const double nn = static_cast<double>(c.neg);
  return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

double aupr(std::span<const ScoredSample> samples) {
  Counts c;
  const auto steps = sweep(sorted_desc(samples, c));
  std::vector<double> precision(steps.size());
  for (std::size_t g = 0; g < steps.size(); ++g) {
    precision[g] = static_cast<double>(steps[g].tp) /
                   static_cast<double>(steps[g].tp + steps[g].fp);
  }
  for (std::size_t g = steps.size(); g-- > 1;) {
    precision[g - 1] = std::max(precision[g - 1], precision[g]);
  }
  double area = 0.0;
  std::size_t prev_tp = 0;
  for (std::size_t g = 0; g < steps.size(); ++g) {
    area += static_cast<double>(steps[g].tp - prev_tp) /
            static_cast<double>(c.pos) * precision[g];
    prev_tp = steps[g].tp;
  }
  return area;
}

double fpr_at_95tpr(std::span<const ScoredSample> samples) {
  Counts c;
  const auto steps = sweep(sorted_desc(samples, c));
  for (const Step& s : steps) {
    if (s.tp * 100 >= 95 * c.pos) {
      return static_cast<double>(s.fp) / static_cast<double>(c.neg);
    }
  }
  return 1.0;
}

Metrics evaluate(std::span<const ScoredSample> samples) {
  Metrics m;
  m.auc = auc(samples);
  m.aupr = aupr(samples);
  m.fpr95 = fpr_at_95tpr(samples);
  for (const auto& s : samples) {
    if (s.true_label == DistLabel::kOOD) {
      ++m.num_ood;
    } else {
      ++m.num_id;
    }
  }
  return m;
}

}  // namespace specgap

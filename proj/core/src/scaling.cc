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

#include "specgap/scaling.h"

#include <algorithm>
#include <chrono>

#include "specgap/error.h"
#include "specgap/lanczos.h"
#include "specgap/laplacian.h"
#include "specgap/random.h"
#include "specgap/synth.h"

namespace specgap {

std::vector<ScalingPoint> lanczos_scaling(const std::vector<std::size_t>& sizes,
                                          double avg_degree, std::size_t steps,
                                          std::size_t repeats, std::uint64_t seed) {
  if (repeats == 0) throw InvalidArgument("lanczos_scaling: repeats must be >= 1");
  std::vector<ScalingPoint> out;
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    const std::size_t n = sizes[s];
    if (n < 2) throw InvalidArgument("lanczos_scaling: sizes must be >= 2");
    const double p = std::min(1.0, avg_degree / static_cast<double>(n - 1));
    const Graph g = sample_graph(GraphModel{ErdosRenyi{n, p}}, derive_seed(seed, s));
    const SparseSymMatrix lap = laplacian(g, LaplacianVariant::kUnnormalized);
    std::vector<double> times;
    std::size_t done = 0;
    for (std::size_t r = 0; r < repeats; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const Tridiagonal t = lanczos_tridiagonalize(lap, steps, derive_seed(seed, 1000 + r));
      const auto t1 = std::chrono::steady_clock::now();
      done = t.size();
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    out.push_back({n, lap.nnz(), done, times[times.size() / 2]});
  }
  return out;
}

}  // namespace specgap

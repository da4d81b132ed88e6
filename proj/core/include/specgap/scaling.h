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

#ifndef SPECGAP_SCALING_H_
#define SPECGAP_SCALING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace specgap {

struct ScalingPoint {
  std::size_t n = 0;
  std::size_t nnz = 0;  // stored Laplacian entries, diagonal included
  std::size_t steps = 0;
  double ms = 0.0;      // median over repeats
};

// Times a fixed number of Lanczos steps on one sparse Erdos-Renyi graph per
// size (expected degree `avg_degree`, unnormalized Laplacian).
std::vector<ScalingPoint> lanczos_scaling(const std::vector<std::size_t>& sizes,
                                          double avg_degree, std::size_t steps,
                                          std::size_t repeats, std::uint64_t seed);

}  // namespace specgap

#endif  // SPECGAP_SCALING_H_

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

#ifndef SPECGAP_PARALLEL_H_
#define SPECGAP_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace specgap {

// Runs body(i) for i in [0, count) on up to `threads` workers (0 or 1 runs
// inline). Work is handed out by index and callers write into per-index
// slots, so results do not depend on the thread count. The first exception
// thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace specgap

#endif  // SPECGAP_PARALLEL_H_

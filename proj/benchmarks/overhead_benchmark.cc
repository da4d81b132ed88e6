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

// Cost of the spectral stage (Laplacian, Lanczos, adjustment) relative to a
// plain embedding pass over the same graphs.

#include <benchmark/benchmark.h>

#include <vector>

#include "specgap/adjust.h"
#include "specgap/embed.h"
#include "specgap/lanczos.h"
#include "specgap/laplacian.h"
#include "specgap/synth.h"

namespace specgap {
namespace {

const GraphCollection& graphs() {
  static const GraphCollection c = generate({GraphModel{ErdosRenyi{40, 0.15}}, 64, 3});
  return c;
}

void BM_EmbedOnly(benchmark::State& state) {
  EmbedConfig cfg;
  cfg.adjust_position = AdjustPosition::none();
  const Embedder embedder(cfg, 1);
  for (auto _ : state) {
    for (const Graph& g : graphs().graphs) {
      benchmark::DoNotOptimize(embedder.embed(g, nullptr));
    }
  }
}
BENCHMARK(BM_EmbedOnly);

void BM_EmbedWithSpectralAdjustment(benchmark::State& state) {
  const Embedder embedder(EmbedConfig{}, 1, AdjustConfig{});
  for (auto _ : state) {
    for (const Graph& g : graphs().graphs) {
      const SpectralSummary s =
          lanczos_top_k(laplacian(g, LaplacianVariant::kUnnormalized), LanczosConfig{});
      benchmark::DoNotOptimize(embedder.embed(g, &s));
    }
  }
}
BENCHMARK(BM_EmbedWithSpectralAdjustment);

}  // namespace
}  // namespace specgap

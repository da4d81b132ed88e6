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

#include <benchmark/benchmark.h>

#include "specgap/lanczos.h"
#include "specgap/laplacian.h"
#include "specgap/synth.h"

namespace specgap {
namespace {

SparseSymMatrix sparse_er_laplacian(std::size_t n) {
  const Graph g = sample_graph(GraphModel{ErdosRenyi{n, 10.0 / static_cast<double>(n - 1)}}, 7);
  return laplacian(g, LaplacianVariant::kUnnormalized);
}

// Fixed step count, so time per iteration should track nnz.
void BM_LanczosFixedSteps(benchmark::State& state) {
  const SparseSymMatrix lap = sparse_er_laplacian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lanczos_tridiagonalize(lap, 60, 1));
  }
  state.counters["nnz"] = static_cast<double>(lap.nnz());
  state.SetComplexityN(static_cast<benchmark::IterationCount>(lap.nnz()));
}
BENCHMARK(BM_LanczosFixedSteps)->Arg(1000)->Arg(2000)->Arg(4000)->Arg(8000)->Complexity(
    benchmark::oN);

void BM_LanczosTopTwo(benchmark::State& state) {
  const SparseSymMatrix lap = sparse_er_laplacian(static_cast<std::size_t>(state.range(0)));
  LanczosConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lanczos_top_k(lap, cfg));
  }
  state.counters["nnz"] = static_cast<double>(lap.nnz());
}
BENCHMARK(BM_LanczosTopTwo)->Arg(1000)->Arg(2000)->Arg(4000);

void BM_SparseMultiply(benchmark::State& state) {
  const SparseSymMatrix lap = sparse_er_laplacian(static_cast<std::size_t>(state.range(0)));
  Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(lap.dim()));
  Eigen::VectorXd y(x.size());
  for (auto _ : state) {
    lap.multiply(x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(lap.nnz()));
}
BENCHMARK(BM_SparseMultiply)->Arg(1000)->Arg(4000)->Arg(16000);

}  // namespace
}  // namespace specgap

// Copyright 2026 The sqsp Authors
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

// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <map>

#include "sqsp/bench.hpp"
#include "sqsp/cost.hpp"
#include "sqsp/synth_be.hpp"
#include "sqsp/synth_cvo.hpp"

namespace sqsp {
namespace {

const Circuit& circuit_for(std::size_t n) {
  static std::map<std::size_t, Circuit> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, synth_be(random_sparse_state(n, n, n))).first;
  }
  return it->second;
}

void BM_CountSerial(benchmark::State& state) {
  const Circuit& c = circuit_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_gates(c, CountMode::elementary));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.size()));
}

void BM_CountParallel(benchmark::State& state) {
  const Circuit& c = circuit_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_gates_parallel(c, CountMode::elementary));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.size()));
}

void run_sparse(benchmark::State& state, bool parallel) {
  SparseBenchOptions opt;
  opt.n_values = {static_cast<std::size_t>(state.range(0))};
  opt.instances = 4;
  opt.parallel = parallel;
  opt.timing = false;
  for (auto _ : state) benchmark::DoNotOptimize(bench_sparse(opt));
}

void BM_BenchSparseSerial(benchmark::State& state) { run_sparse(state, false); }
void BM_BenchSparseParallel(benchmark::State& state) { run_sparse(state, true); }

BENCHMARK(BM_CountSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchSparseSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchSparseParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sqsp

BENCHMARK_MAIN();

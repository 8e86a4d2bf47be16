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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqsp/cost.hpp"
#include "sqsp/sparse_state.hpp"

namespace sqsp {

/// s distinct uniformly random n-bit strings with complex Gaussian
/// amplitudes, normalized. Deterministic in `seed`. Throws InputError when
/// s > 2^n or s == 0.
SparseState random_sparse_state(std::size_t n, std::size_t s, std::uint64_t seed);

enum class Algorithm { cvo, be, lt };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view text);

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t s = 0;  // sparsity, or C(n, k) for U(1) runs
  std::string algorithm;
  CountMode mode = CountMode::elementary;
  /// Counts under `mode`.
  GateCounts counts;
  std::uint64_t high_level_total = 0;
  /// cnot / (n s) for sparse runs, cnot / max(1, C(n,k) k) for U(1) runs.
  double normalized = 0.0;
  /// Instance seed; empty on averaged and model rows.
  std::optional<std::uint64_t> seed;
  double wall_ms = 0.0;
  /// True when the circuit was also simulated and prepared the state exactly.
  bool verified = false;
  bool mean = false;
};

/// Instances with n <= kVerifyMaxQubits and s <= kVerifyMaxTerms are
/// additionally simulated.
inline constexpr std::size_t kVerifyMaxQubits = 32;
inline constexpr std::size_t kVerifyMaxTerms = 16;

struct SparseBenchOptions {
  std::vector<std::size_t> n_values;
  /// Sparsity per n; s = n when unset.
  std::optional<std::size_t> s;
  std::vector<Algorithm> algorithms{Algorithm::cvo, Algorithm::be};
  CountMode mode = CountMode::elementary;
  std::uint64_t seed = 1;
  std::size_t instances = 5;
  bool parallel = true;
  bool timing = true;
};

/// Per n: `instances` random states, each synthesized by every algorithm and
/// counted without building the circuit (LT uses the greedy path). Rows come
/// grouped by n, then instance, then algorithm, followed by one mean row per
/// (n, algorithm). Throws VerificationError if a simulated instance fails.
std::vector<BenchRow> bench_sparse(const SparseBenchOptions& options);

struct U1BenchOptions {
  std::vector<std::size_t> n_values;
  /// Weight per n; floor(n / 2) when unset.
  std::optional<std::size_t> k;
  CountMode mode = CountMode::elementary;
  std::uint64_t budget = 1'000'000;
  bool parallel = true;
  bool timing = true;
};

inline constexpr std::string_view kU1ModelName = "model:C(n,k)*k";

/// Per n: the LT circuit for the uniform superposition over weight-k
/// strings, streamed along the revolving-door path, plus a row for the
/// comparator model C(n,k) k. Throws BudgetExceeded if some C(n,k) exceeds
/// the budget.
std::vector<BenchRow> bench_u1(const U1BenchOptions& options);

/// CSV with header n,s,algorithm,mode,gates_total,cnot,single_qubit,
/// normalized,seed,wall_ms. The seed column holds "mean" on averaged rows,
/// "model" on comparator rows and "-" on unseeded runs.
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace sqsp

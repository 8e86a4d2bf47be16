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
#include <optional>
#include <span>
#include <vector>

#include "sqsp/basis_string.hpp"
#include "sqsp/circuit.hpp"
#include "sqsp/sparse_state.hpp"

namespace sqsp {

/// Batch geometry: `k` strings per batch, `t` = 2^k kept positions, `r` =
/// n - t eliminated positions.
struct BatchParams {
  std::size_t k;
  std::size_t t;
  std::size_t r;

  friend bool operator==(const BatchParams&, const BatchParams&) = default;
};

/// k = max(1, floor(log2 n - log2 log2 n)), capped at s and so that 2^k <= n.
/// An override must satisfy k < log2 n (k = 1 is always accepted); otherwise
/// InputError. Requires n >= 2.
BatchParams choose_params(std::size_t n, std::size_t s,
                          std::optional<std::size_t> override_k = std::nullopt);

/// Position split for one batch. Every position in `removed` carries the same
/// column pattern across the batch as its representative in `kept`, so
/// CNOT(representative[i]; removed[i]) clears it.
struct EliminationPlan {
  std::vector<std::size_t> kept;            // T, ascending, |T| = t
  std::vector<std::size_t> removed;         // R, ascending, |R| = r
  std::vector<std::size_t> representative;  // l(i) for removed[i]
};

struct Elimination {
  EliminationPlan plan;
  /// r CNOTs on an n-qubit register named M.
  Circuit circuit;
  /// Batch strings after the CNOTs: zero on every removed position.
  std::vector<BasisString> eliminated;
};

/// Builds the elimination circuit for a batch of at most k strings. Each
/// distinct column pattern is represented by its smallest position; T is
/// filled up to t with the smallest remaining positions.
/// Throws InputError if the batch is empty, longer than k, or ragged.
Elimination plan_elimination(std::span<const BasisString> batch,
                             const BatchParams& params);

/// Batch-elimination loader. Registers: M = [0, n), A = n, F = n + 1; F
/// starts in |1>. Terms are batched in input order, ceil(s/k) batches.
/// Per batch: elimination CNOTs; A ^= [M_R == 0] (a plain X when r = 0); per
/// string the flag-controlled load of x~ and a C^{t+1} S(c, gamma) on F
/// controlled by M_T (X-conjugated on zero bits) and A; uncompute A; undo the
/// elimination. Stage "batch i" (1-based) marks each batch start and
/// "load i.j" each string's split gate.
void synth_be(const SparseState& state, GateSink& sink,
              std::optional<BatchParams> params = std::nullopt);
Circuit synth_be(const SparseState& state,
                 std::optional<BatchParams> params = std::nullopt);

}  // namespace sqsp

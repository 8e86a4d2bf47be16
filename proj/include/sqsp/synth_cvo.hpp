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

#include <vector>

#include "sqsp/circuit.hpp"
#include "sqsp/sparse_state.hpp"

namespace sqsp {

/// Terms in CVO load order: ascending Hamming weight, ties broken by
/// lexicographic bitstring order.
std::vector<Term> cvo_load_order(const SparseState& state);

/// Baseline flag-qubit loader. Registers: M = [0, n) and F = n, with F
/// starting in |1>. Per term, in load order:
///   CX(F; m_i) for each 1-bit of x,
///   C^t S(c, gamma) on F controlled by the t one-positions of x,
///   the same CX gates again.
/// Stage "term j" (1-based) marks the start of each term.
void synth_cvo(const SparseState& state, GateSink& sink);
Circuit synth_cvo(const SparseState& state);

}  // namespace sqsp

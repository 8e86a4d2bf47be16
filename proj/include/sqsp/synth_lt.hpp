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
#include <functional>
#include <span>

#include "sqsp/basis_string.hpp"
#include "sqsp/circuit.hpp"
#include "sqsp/sparse_state.hpp"

namespace sqsp {

/// AND-tree wiring over the memory register.
///
/// The tree is a full binary tree in heap order: node 1 is the root and node v
/// has children 2v and 2v+1. Memory position i (0-based) owns leaf
/// `leaves + i`; positions past n are padding leaves. Node v lives on tree
/// qubit v - 1.
struct TreeLayout {
  std::size_t n = 0;          // memory qubits
  std::size_t leaves = 0;     // n rounded up to a power of two
  std::size_t tree_size = 0;  // 2 * leaves - 1
  std::size_t helpers = 0;    // log2(leaves) + 1

  std::size_t root() const { return 1; }
  std::size_t leaf(std::size_t position) const { return leaves + position; }
  /// Ancestor of `position`'s leaf at `level`, 1 (the leaf) .. helpers (root).
  std::size_t ancestor(std::size_t position, std::size_t level) const {
    return leaf(position) >> (level - 1);
  }
  /// Sibling of ancestor(position, level), for level < helpers.
  std::size_t sibling(std::size_t position, std::size_t level) const {
    return ancestor(position, level) ^ 1u;
  }
  std::size_t parent(std::size_t node) const { return node >> 1; }
  /// Number of nodes on the path from `node` to the root, root included.
  std::size_t depth(std::size_t node) const;
};

TreeLayout build_layout(std::size_t n);

/// Qubit map of an LT circuit: M = [0, n), T, H, then F.
struct LtRegisters {
  TreeLayout tree;
  Qubit memory = 0;
  Qubit tree_base = 0;
  Qubit helper_base = 0;
  Qubit flag = 0;
  std::size_t width = 0;

  Qubit node_qubit(std::size_t node) const {
    return tree_base + static_cast<Qubit>(node - 1);
  }
  Qubit helper(std::size_t level) const {  // level 1..helpers
    return helper_base + static_cast<Qubit>(level - 1);
  }
};

LtRegisters lt_registers(std::size_t n);

/// One element of a streamed load sequence. `gamma` is the remaining flag
/// weight before this load (1 for the first term of a normalized state).
struct PathTerm {
  BasisString bits;
  Complex amplitude;
  double gamma;
};

/// Fills `next` with the following path element; returns false at the end.
using PathStream = std::function<bool(PathTerm& next)>;

/// Hamiltonian-path loader, streamed. Gate sequence:
///   init: X on the 1-bits of x^1, X on every tree qubit, S(c_1, gamma_1) on F.
///   per following string x^i: CX(F; m_j) on each differing bit j; then per
///     differing bit j ascending, X_F CX(F; h_1) X_F, the Toffoli ladder
///     CCX(h_{k-1}, sib(j, k-1); h_k) for k = 2..helpers, CX(h_k; q(j, k)) for
///     all k, the ladder reversed and X_F CX(F; h_1) X_F again; finally
///     C S(c_i, gamma_i) on F controlled by the root.
///   uncompute: per tree depth from the root down to the level above the
///     leaves, CCX(children; node) on every node; then per memory bit
///     CX(m_j; leaf_j), X-conjugated on m_j where x^s_j = 0, and X on padding
///     leaves.
/// Stages: "init", "iter i" (i = 2..s), "uncompute", "end".
/// Throws InputError if the stream is empty or a string has the wrong length.
void synth_lt_stream(std::size_t n, const PathStream& path, GateSink& sink);

/// Loads `state` along `path`, which must be a permutation of its support
/// (InputError otherwise).
void synth_lt(const SparseState& state, std::span<const BasisString> path,
              GateSink& sink);
Circuit synth_lt(const SparseState& state, std::span<const BasisString> path);

}  // namespace sqsp

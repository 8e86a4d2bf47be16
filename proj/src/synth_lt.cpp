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

#include "sqsp/synth_lt.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "sqsp/errors.hpp"
#include "sqsp/gamma.hpp"

namespace sqsp {

std::size_t TreeLayout::depth(std::size_t node) const {
  return static_cast<std::size_t>(std::bit_width(node));
}

TreeLayout build_layout(std::size_t n) {
  if (n == 0) throw InputError("tree layout needs n >= 1");
  TreeLayout layout;
  layout.n = n;
  layout.leaves = std::bit_ceil(n);
  layout.tree_size = 2 * layout.leaves - 1;
  layout.helpers = static_cast<std::size_t>(std::bit_width(layout.leaves));
  return layout;
}

LtRegisters lt_registers(std::size_t n) {
  LtRegisters regs;
  regs.tree = build_layout(n);
  regs.memory = 0;
  regs.tree_base = static_cast<Qubit>(n);
  regs.helper_base = static_cast<Qubit>(n + regs.tree.tree_size);
  regs.flag = static_cast<Qubit>(n + regs.tree.tree_size + regs.tree.helpers);
  regs.width = std::size_t{regs.flag} + 1;
  return regs;
}

namespace {

void update_path(const LtRegisters& regs, std::size_t position, GateSink& sink) {
  const TreeLayout& tree = regs.tree;
  const Qubit flag = regs.flag;
  // h_1 = [F == 0]
  auto mark_unloaded = [&] {
    sink.add(XGate{flag});
    sink.add(CnotGate{flag, regs.helper(1)});
    sink.add(XGate{flag});
  };
  auto ladder = [&](std::size_t level) {
    sink.add(ToffoliGate{regs.helper(level - 1),
                         regs.node_qubit(tree.sibling(position, level - 1)),
                         regs.helper(level)});
  };

  mark_unloaded();
  for (std::size_t k = 2; k <= tree.helpers; ++k) ladder(k);
  for (std::size_t k = 1; k <= tree.helpers; ++k) {
    sink.add(CnotGate{regs.helper(k), regs.node_qubit(tree.ancestor(position, k))});
  }
  for (std::size_t k = tree.helpers; k >= 2; --k) ladder(k);
  mark_unloaded();
}

}  // namespace

void synth_lt_stream(std::size_t n, const PathStream& path, GateSink& sink) {
  const LtRegisters regs = lt_registers(n);
  const TreeLayout& tree = regs.tree;
  CircuitLayout layout;
  layout.width = regs.width;
  layout.registers = {
      {"M", 0, static_cast<Qubit>(n - 1)},
      {"T", regs.tree_base, static_cast<Qubit>(regs.tree_base + tree.tree_size - 1)},
      {"H", regs.helper_base, static_cast<Qubit>(regs.helper_base + tree.helpers - 1)},
      {"F", regs.flag, regs.flag}};
  layout.initial_ones = {regs.flag};

  PathTerm term;
  if (!path(term)) throw InputError("path is empty");
  auto check_length = [&](const PathTerm& t) {
    if (t.bits.size() != n) {
      throw InputError("path string " + t.bits.to_string() + " has length " +
                       std::to_string(t.bits.size()) + ", expected " +
                       std::to_string(n));
    }
  };
  check_length(term);
  sink.begin(layout);

  sink.stage("init");
  for (std::size_t i : term.bits.ones()) sink.add(XGate{static_cast<Qubit>(i)});
  for (std::size_t v = 1; v <= tree.tree_size; ++v) sink.add(XGate{regs.node_qubit(v)});
  sink.add(SplGate{term.amplitude, term.gamma, regs.flag});

  BasisString prev = std::move(term.bits);
  const Qubit root = regs.node_qubit(tree.root());
  for (std::size_t i = 2; path(term); ++i) {
    check_length(term);
    sink.stage("iter " + std::to_string(i));
    const std::vector<std::size_t> diff = (prev ^ term.bits).ones();
    for (std::size_t j : diff) sink.add(CnotGate{regs.flag, static_cast<Qubit>(j)});
    for (std::size_t j : diff) update_path(regs, j, sink);
    sink.add(CsplGate{{root}, term.amplitude, term.gamma, regs.flag});
    prev = std::move(term.bits);
  }

  sink.stage("uncompute");
  // Root first, so each node is cleared while its children still hold the AND.
  for (std::size_t d = 1; d < tree.helpers; ++d) {
    for (std::size_t v = std::size_t{1} << (d - 1); v < (std::size_t{1} << d); ++v) {
      sink.add(ToffoliGate{regs.node_qubit(2 * v), regs.node_qubit(2 * v + 1),
                           regs.node_qubit(v)});
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto m = static_cast<Qubit>(j);
    const Qubit leaf = regs.node_qubit(tree.leaf(j));
    if (prev.test(j)) {
      sink.add(CnotGate{m, leaf});
    } else {
      sink.add(XGate{m});
      sink.add(CnotGate{m, leaf});
      sink.add(XGate{m});
    }
  }
  for (std::size_t j = n; j < tree.leaves; ++j) {
    sink.add(XGate{regs.node_qubit(tree.leaf(j))});
  }
  sink.stage("end");
}

void synth_lt(const SparseState& state, std::span<const BasisString> path,
              GateSink& sink) {
  if (path.size() != state.sparsity()) {
    throw InputError("path visits " + std::to_string(path.size()) +
                     " strings, state has " + std::to_string(state.sparsity()));
  }
  std::unordered_map<BasisString, std::size_t, BasisStringHash> index;
  for (std::size_t j = 0; j < state.sparsity(); ++j) {
    index.emplace(state.terms()[j].bits, j);
  }
  std::vector<Complex> amps;
  std::vector<char> seen(state.sparsity(), 0);
  amps.reserve(path.size());
  for (const auto& bits : path) {
    const auto it = index.find(bits);
    if (it == index.end()) {
      throw InputError("path string " + bits.to_string() + " is not in the support");
    }
    if (seen[it->second]++) {
      throw InputError("path visits " + bits.to_string() + " twice");
    }
    amps.push_back(state.terms()[it->second].amplitude);
  }
  const std::vector<double> gammas = gamma_schedule(amps);
  std::size_t next = 0;
  synth_lt_stream(
      state.num_qubits(),
      [&](PathTerm& out) {
        if (next == path.size()) return false;
        out = {path[next], amps[next], gammas[next]};
        ++next;
        return true;
      },
      sink);
}

Circuit synth_lt(const SparseState& state, std::span<const BasisString> path) {
  CircuitRecorder recorder;
  synth_lt(state, path, recorder);
  return recorder.take();
}

}  // namespace sqsp

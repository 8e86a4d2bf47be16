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

#include "sqsp/cost.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "sqsp/decompose.hpp"

namespace sqsp {

std::string_view mode_name(CountMode mode) {
  return mode == CountMode::high_level ? "high" : "elementary";
}

std::optional<CountMode> parse_mode(std::string_view text) {
  if (text == "high" || text == "high_level") return CountMode::high_level;
  if (text == "elementary") return CountMode::elementary;
  return std::nullopt;
}

std::uint64_t GateCounts::high_level_total() const {
  return std::accumulate(by_kind.begin(), by_kind.end(), std::uint64_t{0});
}

GateCounts& GateCounts::operator+=(const GateCounts& o) {
  total += o.total;
  cnot += o.cnot;
  single_qubit += o.single_qubit;
  for (std::size_t i = 0; i < by_kind.size(); ++i) by_kind[i] += o.by_kind[i];
  virtual_work += o.virtual_work;
  return *this;
}

namespace {

GateCounts elementary_cost(const Gate& g) {
  GateCounts c;
  switch (kind(g)) {
    case GateKind::X:
    case GateKind::SPL:
      c.single_qubit = 1;
      break;
    case GateKind::CNOT:
      c.cnot = 1;
      break;
    case GateKind::Toffoli: {
      // Same expansion for every wiring.
      static const std::pair<std::uint64_t, std::uint64_t> kToffoli = [] {
        std::pair<std::uint64_t, std::uint64_t> n{0, 0};
        for (const auto& e : decompose_toffoli(ToffoliGate{0, 1, 2})) {
          ++(e.is_cnot() ? n.first : n.second);
        }
        return n;
      }();
      c.cnot = kToffoli.first;
      c.single_qubit = kToffoli.second;
      break;
    }
    case GateKind::MCX:
    case GateKind::CSPL:
      throw std::logic_error("elementary_cost: gate needs work qubits");
  }
  c.total = c.cnot + c.single_qubit;
  return c;
}

}  // namespace

GateCounts GateCounter::mcx_cost(std::size_t t) {
  const std::size_t free = width_ > t ? width_ - t - 1 : 0;
  const bool use_ladder = free >= mcx_ladder_work(t);
  auto [it, inserted] = mcx_cache_.try_emplace({t, use_ladder});
  if (!inserted) return it->second;

  // Synthetic wiring: controls 0..t-1, target t, work after.
  McxGate gate;
  for (std::size_t i = 0; i < t; ++i) gate.controls.push_back(static_cast<Qubit>(i));
  gate.target = static_cast<Qubit>(t);
  const std::size_t work_count =
      use_ladder ? mcx_ladder_work(t) : std::max<std::size_t>(free, 1);
  std::vector<Qubit> work;
  for (std::size_t i = 0; i < work_count; ++i) work.push_back(static_cast<Qubit>(t + 1 + i));

  GateCounts cost;
  if (t <= 2) {
    cost = elementary_cost(controlled_x(gate.controls, gate.target));
  } else {
    for (const Gate& sub : decompose_mcx(gate, work)) cost += elementary_cost(sub);
    if (free == 0) cost.virtual_work = 1;
  }
  cost.by_kind = {};
  it->second = cost;
  return cost;
}

void GateCounter::add(const Gate& gate) {
  const GateKind k = kind(gate);
  ++counts_.by_kind[static_cast<std::size_t>(k)];
  GateCounts c;
  if (mode_ == CountMode::high_level) {
    if (k == GateKind::CNOT) c.cnot = 1;
    if (k == GateKind::X || k == GateKind::SPL) c.single_qubit = 1;
    c.total = 1;
  } else if (k == GateKind::MCX) {
    c = mcx_cost(std::get<McxGate>(gate).controls.size());
  } else if (k == GateKind::CSPL) {
    c = mcx_cost(std::get<CsplGate>(gate).controls.size());
    c.single_qubit += 2;
    c.total += 2;
  } else {
    c = elementary_cost(gate);
  }
  c.by_kind = {};
  counts_ += c;
}

void CountingSink::begin(const CircuitLayout& layout) {
  layout.validate();
  layout_ = layout;
  counter_.emplace(layout.width, mode_);
}

void CountingSink::add(Gate gate) {
  if (!counter_) throw std::logic_error("CountingSink::add before begin");
  counter_->add(gate);
}

const GateCounts& CountingSink::counts() const {
  static const GateCounts kEmpty;
  return counter_ ? counter_->counts() : kEmpty;
}

GateCounts count_gates(const Circuit& circuit, CountMode mode) {
  GateCounter counter(circuit.width(), mode);
  for (const Gate& g : circuit.gates()) counter.add(g);
  return counter.counts();
}

GateCounts count_gates_parallel(const Circuit& circuit, CountMode mode) {
  const auto& gates = circuit.gates();
  const auto n = static_cast<std::ptrdiff_t>(gates.size());
  GateCounts result;
#pragma omp parallel
  {
    GateCounter local(circuit.width(), mode);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) local.add(gates[static_cast<std::size_t>(i)]);
#pragma omp critical
    result += local.counts();
  }
  return result;
}

}  // namespace sqsp

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

#include "sqsp/synth_cvo.hpp"

#include <algorithm>
#include <string>

#include "sqsp/gamma.hpp"

namespace sqsp {

std::vector<Term> cvo_load_order(const SparseState& state) {
  std::vector<std::pair<std::size_t, const Term*>> keyed;
  keyed.reserve(state.sparsity());
  for (const auto& term : state.terms()) keyed.emplace_back(term.bits.weight(), &term);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second->bits < b.second->bits;
  });
  std::vector<Term> out;
  out.reserve(keyed.size());
  for (const auto& [w, term] : keyed) out.push_back(*term);
  return out;
}

void synth_cvo(const SparseState& state, GateSink& sink) {
  const std::size_t n = state.num_qubits();
  const auto flag = static_cast<Qubit>(n);
  CircuitLayout layout;
  layout.width = n + 1;
  layout.registers = {{"M", 0, static_cast<Qubit>(n - 1)}, {"F", flag, flag}};
  layout.initial_ones = {flag};
  sink.begin(layout);

  const std::vector<Term> order = cvo_load_order(state);
  std::vector<Complex> amps;
  amps.reserve(order.size());
  for (const auto& t : order) amps.push_back(t.amplitude);
  const std::vector<double> gammas = gamma_schedule(amps);

  for (std::size_t j = 0; j < order.size(); ++j) {
    sink.stage("term " + std::to_string(j + 1));
    std::vector<Qubit> ones;
    for (std::size_t i : order[j].bits.ones()) ones.push_back(static_cast<Qubit>(i));
    for (Qubit q : ones) sink.add(CnotGate{flag, q});
    sink.add(controlled_spl(ones, order[j].amplitude, gammas[j], flag));
    for (Qubit q : ones) sink.add(CnotGate{flag, q});
  }
  sink.stage("end");
}

Circuit synth_cvo(const SparseState& state) {
  CircuitRecorder recorder;
  synth_cvo(state, recorder);
  return recorder.take();
}

}  // namespace sqsp

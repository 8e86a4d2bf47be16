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

#include "sqsp/synth_be.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "sqsp/errors.hpp"
#include "sqsp/gamma.hpp"

namespace sqsp {

namespace {

// k < log2 n, written without floating point.
bool below_log2(std::size_t k, std::size_t n) {
  return k < 63 && (std::size_t{1} << k) < n;
}

void check_params(const BatchParams& p, std::size_t n) {
  if (p.k < 1 || p.k >= 63 || p.t != (std::size_t{1} << p.k) || p.t > n ||
      p.r != n - p.t) {
    throw InputError("inconsistent batch parameters k=" + std::to_string(p.k) +
                     " t=" + std::to_string(p.t) + " r=" + std::to_string(p.r) +
                     " for n=" + std::to_string(n));
  }
}

}  // namespace

BatchParams choose_params(std::size_t n, std::size_t s,
                          std::optional<std::size_t> override_k) {
  if (n < 2) throw InputError("batch elimination needs n >= 2");
  std::size_t k = 0;
  if (override_k) {
    k = *override_k;
    if (k < 1) throw InputError("batch size k must be at least 1");
    if (k != 1 && !below_log2(k, n)) {
      throw InputError("batch size k = " + std::to_string(k) +
                       " violates k < log2 n for n = " + std::to_string(n));
    }
  } else {
    const double lg = std::log2(static_cast<double>(n));
    const double raw = std::floor(lg - std::log2(lg));
    k = raw >= 1.0 ? static_cast<std::size_t>(raw) : 1;
    while (k > 1 && (k >= 63 || (std::size_t{1} << k) > n)) --k;
  }
  k = std::max<std::size_t>(1, std::min(k, s));
  const std::size_t t = std::size_t{1} << k;
  return {k, t, n - t};
}

Elimination plan_elimination(std::span<const BasisString> batch,
                             const BatchParams& params) {
  if (batch.empty()) throw InputError("elimination batch is empty");
  if (batch.size() > params.k) {
    throw InputError("batch of " + std::to_string(batch.size()) +
                     " strings exceeds k = " + std::to_string(params.k));
  }
  const std::size_t n = batch.front().size();
  check_params(params, n);
  for (const auto& s : batch) {
    if (s.size() != n) throw InputError("batch strings differ in length");
  }

  // Column pattern at each position, one bit per batch string.
  std::vector<std::uint64_t> pattern(n, 0);
  for (std::size_t p = 0; p < batch.size(); ++p) {
    for (std::size_t i : batch[p].ones()) pattern[i] |= std::uint64_t{1} << p;
  }

  std::unordered_map<std::uint64_t, std::size_t> first_at;
  std::vector<char> in_kept(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (first_at.try_emplace(pattern[i], i).second) in_kept[i] = 1;
  }
  std::size_t kept_count = first_at.size();
  for (std::size_t i = 0; i < n && kept_count < params.t; ++i) {
    if (!in_kept[i]) {
      in_kept[i] = 1;
      ++kept_count;
    }
  }

  Elimination out;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_kept[i]) {
      out.plan.kept.push_back(i);
    } else {
      out.plan.removed.push_back(i);
      out.plan.representative.push_back(first_at.at(pattern[i]));
    }
  }

  CircuitLayout layout;
  layout.width = n;
  layout.registers = {{"M", 0, static_cast<Qubit>(n - 1)}};
  out.circuit = Circuit(std::move(layout));
  for (std::size_t j = 0; j < out.plan.removed.size(); ++j) {
    out.circuit.add(CnotGate{static_cast<Qubit>(out.plan.representative[j]),
                             static_cast<Qubit>(out.plan.removed[j])});
  }

  out.eliminated.assign(batch.begin(), batch.end());
  for (auto& s : out.eliminated) {
    for (std::size_t j = 0; j < out.plan.removed.size(); ++j) {
      if (s.test(out.plan.representative[j])) s.flip(out.plan.removed[j]);
    }
  }
  return out;
}

void synth_be(const SparseState& state, GateSink& sink,
              std::optional<BatchParams> params) {
  const std::size_t n = state.num_qubits();
  const std::size_t s = state.sparsity();
  const BatchParams p = params ? *params : choose_params(n, s);
  check_params(p, n);

  const auto anc = static_cast<Qubit>(n);
  const auto flag = static_cast<Qubit>(n + 1);
  CircuitLayout layout;
  layout.width = n + 2;
  layout.registers = {
      {"M", 0, static_cast<Qubit>(n - 1)}, {"A", anc, anc}, {"F", flag, flag}};
  layout.initial_ones = {flag};
  sink.begin(layout);

  std::vector<Complex> amps;
  amps.reserve(s);
  for (const auto& t : state.terms()) amps.push_back(t.amplitude);
  const std::vector<double> gammas = gamma_schedule(amps);

  const auto& terms = state.terms();
  const std::size_t batches = (s + p.k - 1) / p.k;
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t lo = b * p.k;
    const std::size_t hi = std::min(s, lo + p.k);
    sink.stage("batch " + std::to_string(b + 1));

    std::vector<BasisString> strings;
    for (std::size_t j = lo; j < hi; ++j) strings.push_back(terms[j].bits);
    const Elimination elim = plan_elimination(strings, p);
    const auto& gates = elim.circuit.gates();

    std::vector<Qubit> removed;
    for (std::size_t i : elim.plan.removed) removed.push_back(static_cast<Qubit>(i));
    std::vector<Qubit> split_controls;
    for (std::size_t i : elim.plan.kept) split_controls.push_back(static_cast<Qubit>(i));
    split_controls.push_back(anc);

    // A ^= [M_R == 0^r]
    auto toggle_anc = [&] {
      for (Qubit q : removed) sink.add(XGate{q});
      sink.add(controlled_x(removed, anc));
      for (Qubit q : removed) sink.add(XGate{q});
    };

    for (const Gate& g : gates) sink.add(g);
    toggle_anc();

    for (std::size_t j = lo; j < hi; ++j) {
      const BasisString& x = elim.eliminated[j - lo];
      std::vector<Qubit> ones;
      std::vector<Qubit> zeros;
      for (std::size_t i : elim.plan.kept) {
        (x.test(i) ? ones : zeros).push_back(static_cast<Qubit>(i));
      }
      for (Qubit q : ones) sink.add(CnotGate{flag, q});
      sink.stage("load " + std::to_string(b + 1) + "." + std::to_string(j - lo + 1));
      for (Qubit q : zeros) sink.add(XGate{q});
      sink.add(controlled_spl(split_controls, terms[j].amplitude, gammas[j], flag));
      for (Qubit q : zeros) sink.add(XGate{q});
      for (Qubit q : ones) sink.add(CnotGate{flag, q});
    }

    toggle_anc();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) sink.add(*it);
  }
  sink.stage("end");
}

Circuit synth_be(const SparseState& state, std::optional<BatchParams> params) {
  CircuitRecorder recorder;
  synth_be(state, recorder, params);
  return recorder.take();
}

}  // namespace sqsp

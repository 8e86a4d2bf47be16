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

#include "sqsp/sparse_sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "overloaded.hpp"
#include "sqsp/decompose.hpp"
#include "sqsp/errors.hpp"
#include "text_io.hpp"

namespace sqsp {

using detail::Overloaded;

SimState::SimState(std::size_t width) : width_(width) {}

SimState SimState::basis(std::size_t width, const std::vector<Qubit>& ones) {
  SimState s(width);
  BasisString key(width);
  for (Qubit q : ones) {
    if (q >= width) throw InputError("basis qubit out of range");
    key.set(q);
  }
  s.amplitudes_.emplace(std::move(key), Complex(1.0));
  return s;
}

SimState SimState::initial(const CircuitLayout& layout) {
  return basis(layout.width, layout.initial_ones);
}

Complex SimState::amplitude(const BasisString& key) const {
  const auto it = amplitudes_.find(key);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double SimState::norm_squared() const {
  double total = 0.0;
  for (const auto& [key, amp] : amplitudes_) total += std::norm(amp);
  return total;
}

std::vector<std::pair<BasisString, Complex>> SimState::sorted() const {
  std::vector<std::pair<BasisString, Complex>> out(amplitudes_.begin(),
                                                   amplitudes_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void SimState::set(const BasisString& key, Complex amp) {
  if (key.size() != width_) throw InputError("basis string width mismatch");
  if (std::abs(amp) < kPruneThreshold) {
    amplitudes_.erase(key);
  } else {
    amplitudes_[key] = amp;
  }
}

namespace {

bool all_set(const BasisString& key, const std::vector<Qubit>& controls) {
  return std::all_of(controls.begin(), controls.end(),
                     [&](Qubit q) { return key.test(q); });
}

SimState::Map permute(const SimState::Map& in, const std::vector<Qubit>& controls,
                      Qubit target) {
  SimState::Map out;
  out.reserve(in.size());
  for (const auto& [key, amp] : in) {
    if (all_set(key, controls)) {
      BasisString moved(key);
      moved.flip(target);
      out.emplace(std::move(moved), amp);
    } else {
      out.emplace(key, amp);
    }
  }
  return out;
}

SimState::Map split(const SimState::Map& in, const std::vector<Qubit>& controls,
                    Complex alpha, double beta, Qubit target) {
  const Matrix2 u = spl_matrix(alpha, beta);
  SimState::Map out;
  out.reserve(in.size() + in.size() / 2 + 1);
  for (const auto& [key, amp] : in) {
    if (!all_set(key, controls)) {
      out[key] += amp;
      continue;
    }
    const int col = key.test(target) ? 1 : 0;
    BasisString k0(key);
    k0.set(target, false);
    BasisString k1(key);
    k1.set(target, true);
    out[k0] += u[0][col] * amp;
    out[k1] += u[1][col] * amp;
  }
  std::erase_if(out, [](const auto& kv) {
    return std::abs(kv.second) < kPruneThreshold;
  });
  return out;
}

}  // namespace

SimState apply(const SimState& state, const Gate& gate) {
  validate_gate(gate, state.width_);
  SimState out(state.width_);
  out.amplitudes_ = std::visit(
      Overloaded{
          [&](const XGate& g) { return permute(state.amplitudes_, {}, g.target); },
          [&](const CnotGate& g) {
            return permute(state.amplitudes_, {g.control}, g.target);
          },
          [&](const ToffoliGate& g) {
            return permute(state.amplitudes_, {g.control1, g.control2}, g.target);
          },
          [&](const McxGate& g) {
            return permute(state.amplitudes_, g.controls, g.target);
          },
          [&](const SplGate& g) {
            return split(state.amplitudes_, {}, g.alpha, g.beta, g.target);
          },
          [&](const CsplGate& g) {
            return split(state.amplitudes_, g.controls, g.alpha, g.beta, g.target);
          },
      },
      gate);
  return out;
}

SimState run(const Circuit& circuit, const SimState& initial) {
  if (initial.width() != circuit.width()) {
    throw InputError("initial state width " + std::to_string(initial.width()) +
                     " does not match circuit width " +
                     std::to_string(circuit.width()));
  }
  SimState state = initial;
  for (const Gate& g : circuit.gates()) state = sqsp::apply(state, g);
  return state;
}

SimState run(const Circuit& circuit) {
  return run(circuit, SimState::initial(circuit.layout()));
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << (exact ? "PASS" : "FAIL") << '\n'
      << "fidelity " << detail::format_real(fidelity) << '\n'
      << "max_deviation " << detail::format_real(max_deviation) << '\n'
      << "ancillas " << (ancillas_clean ? "clean" : "dirty")
      << " (leakage " << detail::format_real(ancilla_leakage) << ")\n";
  constexpr std::size_t kShown = 16;
  for (std::size_t i = 0; i < offending.size() && i < kShown; ++i) {
    out << "offending " << offending[i] << '\n';
  }
  if (offending.size() > kShown) {
    out << "... " << offending.size() - kShown << " more offending states\n";
  }
  return out.str();
}

VerificationReport verify_preparation(const Circuit& circuit,
                                      const SparseState& target) {
  const Register& mem = circuit.reg("M");
  if (mem.size() != target.num_qubits()) {
    throw InputError("memory register has " + std::to_string(mem.size()) +
                     " qubits, target state has " +
                     std::to_string(target.num_qubits()));
  }
  const SimState out = run(circuit);

  SimState::Map expected;
  for (const auto& term : target.terms()) {
    BasisString key(circuit.width());
    key.assign(mem.lo, term.bits);
    expected.emplace(std::move(key), term.amplitude);
  }

  auto ancillas_zero = [&](const BasisString& key) {
    for (std::size_t q = 0; q < key.size(); ++q) {
      if (key.test(q) && !mem.contains(static_cast<Qubit>(q))) return false;
    }
    return true;
  };

  VerificationReport report;
  report.ancillas_clean = true;
  Complex overlap{};
  std::vector<BasisString> bad;
  for (const auto& [key, amp] : out.amplitudes()) {
    const auto it = expected.find(key);
    const Complex want = it == expected.end() ? Complex{} : it->second;
    overlap += std::conj(want) * amp;
    const double dev = std::abs(amp - want);
    report.max_deviation = std::max(report.max_deviation, dev);
    if (!ancillas_zero(key)) {
      report.ancilla_leakage += std::norm(amp);
      if (std::abs(amp) > kVerifyTolerance) report.ancillas_clean = false;
    }
    if (dev > kVerifyTolerance) bad.push_back(key);
  }
  for (const auto& [key, want] : expected) {
    if (out.amplitudes().count(key)) continue;
    const double dev = std::abs(want);
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > kVerifyTolerance) bad.push_back(key);
  }
  std::sort(bad.begin(), bad.end());
  for (const auto& key : bad) report.offending.push_back(key.to_string());
  report.fidelity = std::abs(overlap);
  report.exact = report.max_deviation <= kVerifyTolerance && report.ancillas_clean;
  return report;
}

double assert_prepares(const Circuit& circuit, const SparseState& target) {
  const VerificationReport report = verify_preparation(circuit, target);
  if (!report.exact) {
    throw VerificationError("circuit does not prepare the target state\n" +
                            report.summary());
  }
  return report.fidelity;
}

}  // namespace sqsp

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

#include "sqsp/gate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "overloaded.hpp"
#include "sqsp/errors.hpp"

namespace sqsp {

namespace {

using detail::Overloaded;

void check_spl_params(Complex alpha, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InputError("split gate requires beta > 0, got " + std::to_string(beta));
  }
  if (!(std::abs(alpha) <= beta + kSplSlack)) {
    throw InputError("split gate requires |alpha| <= beta");
  }
}

}  // namespace

std::string_view kind_name(GateKind k) {
  switch (k) {
    case GateKind::X:
      return "X";
    case GateKind::CNOT:
      return "CX";
    case GateKind::Toffoli:
      return "CCX";
    case GateKind::MCX:
      return "MCX";
    case GateKind::SPL:
      return "SPL";
    case GateKind::CSPL:
      return "CSPL";
  }
  return "?";
}

std::vector<Qubit> controls_of(const Gate& g) {
  return std::visit(
      Overloaded{
          [](const XGate&) { return std::vector<Qubit>{}; },
          [](const CnotGate& c) { return std::vector<Qubit>{c.control}; },
          [](const ToffoliGate& c) {
            return std::vector<Qubit>{c.control1, c.control2};
          },
          [](const McxGate& c) { return c.controls; },
          [](const SplGate&) { return std::vector<Qubit>{}; },
          [](const CsplGate& c) { return c.controls; },
      },
      g);
}

Qubit target_of(const Gate& g) {
  return std::visit([](const auto& c) { return c.target; }, g);
}

Gate controlled_x(std::vector<Qubit> controls, Qubit target) {
  switch (controls.size()) {
    case 0:
      return XGate{target};
    case 1:
      return CnotGate{controls[0], target};
    case 2:
      return ToffoliGate{controls[0], controls[1], target};
    default:
      return McxGate{std::move(controls), target};
  }
}

Gate controlled_spl(std::vector<Qubit> controls, Complex alpha, double beta,
                    Qubit target) {
  if (controls.empty()) return SplGate{alpha, beta, target};
  return CsplGate{std::move(controls), alpha, beta, target};
}

void validate_gate(const Gate& g, std::size_t width) {
  std::vector<Qubit> qubits = controls_of(g);
  if (kind(g) == GateKind::MCX && qubits.empty()) {
    throw InputError("MCX needs at least one control");
  }
  if (kind(g) == GateKind::CSPL && qubits.empty()) {
    throw InputError("CSPL needs at least one control");
  }
  qubits.push_back(target_of(g));
  for (Qubit q : qubits) {
    if (q >= width) {
      throw InputError(std::string(kind_name(kind(g))) + " qubit " +
                       std::to_string(q) + " out of range for width " +
                       std::to_string(width));
    }
  }
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw InputError(std::string(kind_name(kind(g))) +
                     " qubits must be pairwise distinct");
  }
  if (const auto* spl = std::get_if<SplGate>(&g)) {
    check_spl_params(spl->alpha, spl->beta);
  } else if (const auto* cspl = std::get_if<CsplGate>(&g)) {
    check_spl_params(cspl->alpha, cspl->beta);
  }
}

}  // namespace sqsp

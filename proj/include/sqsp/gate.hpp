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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace sqsp {

using Qubit = std::uint32_t;
using Complex = std::complex<double>;

// All controls are positive. Zero-valued control conditions are written as
// explicit X conjugation by the synthesizers.

struct XGate {
  Qubit target;
};

struct CnotGate {
  Qubit control;
  Qubit target;
};

struct ToffoliGate {
  Qubit control1;
  Qubit control2;
  Qubit target;
};

struct McxGate {
  std::vector<Qubit> controls;
  Qubit target;
};

/// Split gate S(alpha, beta); requires |alpha| <= beta and beta > 0.
struct SplGate {
  Complex alpha;
  double beta;
  Qubit target;
};

struct CsplGate {
  std::vector<Qubit> controls;
  Complex alpha;
  double beta;
  Qubit target;
};

using Gate =
    std::variant<XGate, CnotGate, ToffoliGate, McxGate, SplGate, CsplGate>;

enum class GateKind { X, CNOT, Toffoli, MCX, SPL, CSPL };
inline constexpr std::size_t kGateKindCount = 6;

inline GateKind kind(const Gate& g) { return static_cast<GateKind>(g.index()); }
std::string_view kind_name(GateKind k);

std::vector<Qubit> controls_of(const Gate& g);
Qubit target_of(const Gate& g);

/// C^t X with the cheapest IR kind: X, CNOT, Toffoli, or MCX.
Gate controlled_x(std::vector<Qubit> controls, Qubit target);
/// SPL for zero controls, CSPL otherwise.
Gate controlled_spl(std::vector<Qubit> controls, Complex alpha, double beta,
                    Qubit target);

/// Throws InputError unless every index is below `width`, controls are
/// pairwise distinct and distinct from the target, and split-gate parameters
/// satisfy beta > 0 and |alpha| <= beta (up to kSplSlack).
void validate_gate(const Gate& g, std::size_t width);

inline constexpr double kSplSlack = 1e-12;

}  // namespace sqsp

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
#include <span>
#include <vector>

#include "sqsp/circuit.hpp"
#include "sqsp/gate.hpp"

namespace sqsp {

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// The split gate
///
///   (1/beta) [ -sqrt(beta^2 - |alpha|^2)   alpha                     ]
///            [  conj(alpha)                 sqrt(beta^2 - |alpha|^2) ]
///
/// Applied to |1> it yields (alpha|0> + sqrt(beta^2-|alpha|^2)|1>)/beta, which
/// is how every synthesizer peels one amplitude off the flag branch.
/// Throws std::domain_error when beta <= 0 or |alpha| > beta + kSplSlack; a
/// radicand in [-kSplSlack, 0) is clamped to 0.
Matrix2 spl_matrix(Complex alpha, double beta);

/// Unitary W with W X W^dagger = spl_matrix(alpha, beta). The split gate is
/// Hermitian with eigenvalues +1 and -1, so a controlled split gate is a
/// controlled X conjugated by two single-qubit gates.
Matrix2 spl_diagonalizer(Complex alpha, double beta);

Matrix2 adjoint(const Matrix2& m);
Matrix2 multiply(const Matrix2& a, const Matrix2& b);

/// Single-qubit gate or CNOT: the elementary gate set circuit size is
/// measured in.
struct ElementaryGate {
  enum class Kind { H, S, T, Tdg, X, U, CX };

  Kind kind;
  Qubit target;
  Qubit control = 0;  // CX only
  Matrix2 matrix{};   // single-qubit kinds

  bool is_cnot() const { return kind == Kind::CX; }
};

ElementaryGate single_qubit(ElementaryGate::Kind kind, Qubit target);
ElementaryGate unitary_gate(const Matrix2& m, Qubit target);
ElementaryGate cnot(Qubit control, Qubit target);

/// Standard 6-CNOT, 10-single-qubit (H, T, T^dagger, S) Toffoli circuit.
std::vector<ElementaryGate> decompose_toffoli(const ToffoliGate& gate);

/// C^t X as a list of X / CNOT / Toffoli gates, borrowing `work` qubits in an
/// arbitrary (dirty) state and restoring them.
///
/// t = 1 gives one CNOT and t = 2 one Toffoli. For t >= 3 with at least t - 2
/// work qubits the result is the 4(t-2)-Toffoli ladder; with 1 <= |work| <
/// t - 2 the controls are split in two halves around one borrowed qubit and
/// each half is laddered using the other half as work space (about 8t
/// Toffolis). Throws InputError when t >= 3 and no work qubit is supplied, or
/// when work qubits overlap the gate.
std::vector<Gate> decompose_mcx(const McxGate& gate, std::span<const Qubit> work);

/// Number of work qubits decompose_mcx needs for its linear ladder.
inline std::size_t mcx_ladder_work(std::size_t controls) {
  return controls >= 3 ? controls - 2 : 0;
}

/// C^t S(alpha, beta) = W . C^t X . W^dagger on the target.
struct CsplDecomposition {
  ElementaryGate before;  // W^dagger
  Gate controlled_x;      // CNOT, Toffoli or MCX
  ElementaryGate after;   // W
};
CsplDecomposition decompose_cspl(const CsplGate& gate);

/// Expands every gate of `circuit` to elementary gates, borrowing the lowest
/// indexed qubits not touched by a gate as dirty work space. Throws
/// InputError if a gate with three or more controls touches every qubit.
std::vector<ElementaryGate> lower_to_elementary(const Circuit& circuit);

}  // namespace sqsp

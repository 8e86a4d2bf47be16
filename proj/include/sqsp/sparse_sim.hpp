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
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqsp/basis_string.hpp"
#include "sqsp/circuit.hpp"
#include "sqsp/gate.hpp"
#include "sqsp/sparse_state.hpp"

namespace sqsp {

/// Amplitudes below this magnitude are dropped after a split gate.
inline constexpr double kPruneThreshold = 1e-14;
/// Componentwise tolerance for exact-preparation checks.
inline constexpr double kVerifyTolerance = 1e-9;

/// Sparse statevector: basis string over all circuit qubits -> amplitude.
class SimState {
 public:
  using Map = std::unordered_map<BasisString, Complex, BasisStringHash>;

  explicit SimState(std::size_t width);
  /// Computational basis state with `ones` set.
  static SimState basis(std::size_t width, const std::vector<Qubit>& ones);
  /// All-zero state with the layout's initial |1> qubits set.
  static SimState initial(const CircuitLayout& layout);

  std::size_t width() const { return width_; }
  std::size_t support_size() const { return amplitudes_.size(); }
  const Map& amplitudes() const { return amplitudes_; }
  Complex amplitude(const BasisString& key) const;
  double norm_squared() const;

  /// Entries sorted by basis string, for deterministic output.
  std::vector<std::pair<BasisString, Complex>> sorted() const;

  void set(const BasisString& key, Complex amp);

 private:
  friend SimState apply(const SimState& state, const Gate& gate);

  std::size_t width_;
  Map amplitudes_;
};

/// Applies one gate. Permutation gates relabel keys; split gates map each
/// term onto at most two terms and prune below kPruneThreshold. Throws
/// InputError for qubit indices outside the state width.
SimState apply(const SimState& state, const Gate& gate);

/// Left-to-right application of every gate.
SimState run(const Circuit& circuit, const SimState& initial);
SimState run(const Circuit& circuit);

struct VerificationReport {
  double fidelity = 0.0;
  /// Max |out - expected| over all basis states with ancillas at zero.
  double max_deviation = 0.0;
  /// Total probability outside the "ancillas all zero" subspace.
  double ancilla_leakage = 0.0;
  bool ancillas_clean = false;
  bool exact = false;
  /// Basis strings (full circuit width) whose amplitude is wrong, sorted.
  std::vector<std::string> offending;

  std::string summary() const;
};

/// Runs `circuit` from its initial state and compares with `target` on the
/// register named "M", every other qubit expected back at |0>.
/// Throws InputError if M is missing or its size differs from target.n.
VerificationReport verify_preparation(const Circuit& circuit,
                                      const SparseState& target);

/// verify_preparation that throws VerificationError unless the preparation is
/// exact within kVerifyTolerance. Returns the fidelity.
double assert_prepares(const Circuit& circuit, const SparseState& target);

}  // namespace sqsp

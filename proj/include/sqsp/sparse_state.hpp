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

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sqsp/basis_string.hpp"

namespace sqsp {

using Amplitude = std::complex<double>;

struct Term {
  BasisString bits;
  Amplitude amplitude;
};

/// Normalized superposition over a small set of basis states: the input to
/// every synthesizer.
///
/// Construction validates: strings all of length n and pairwise distinct,
/// amplitudes nonzero (magnitude at least kMinAmplitude), and the squared
/// norm within kNormTolerance of 1. Violations throw InputError.
class SparseState {
 public:
  static constexpr double kNormTolerance = 1e-9;
  static constexpr double kMinAmplitude = 1e-14;

  SparseState(std::size_t n, std::vector<Term> terms);

  std::size_t num_qubits() const { return n_; }
  std::size_t sparsity() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Binary support in term order.
  std::vector<BasisString> support() const;

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

/// State file format:
///
///   n <qubits> s <terms>
///   <bitstring> <re> <im>      (s lines)
///
/// The leftmost bitstring character is memory qubit 0.
/// Blank lines and lines starting with '#' are ignored. Malformed input
/// throws ParseError with the offending line and column.
SparseState read_state(std::istream& in);
SparseState read_state_file(const std::string& path);
void write_state(std::ostream& out, const SparseState& state);

}  // namespace sqsp

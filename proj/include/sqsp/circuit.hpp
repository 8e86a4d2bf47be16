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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqsp/gate.hpp"

namespace sqsp {

/// Named inclusive range [lo, hi] of global qubit indices.
struct Register {
  std::string name;
  Qubit lo;
  Qubit hi;

  std::size_t size() const { return std::size_t{hi} - lo + 1; }
  Qubit operator[](std::size_t i) const { return lo + static_cast<Qubit>(i); }
  bool contains(Qubit q) const { return q >= lo && q <= hi; }

  friend bool operator==(const Register&, const Register&) = default;
};

/// Width, register map, and the initial-state convention: every qubit starts
/// in |0> except those listed in `initial_ones`.
struct CircuitLayout {
  std::size_t width = 0;
  std::vector<Register> registers;
  std::vector<Qubit> initial_ones;

  const Register* find(std::string_view name) const;
  /// Throws InputError if ranges overlap or exceed the width.
  void validate() const;

  friend bool operator==(const CircuitLayout&, const CircuitLayout&) = default;
};

/// Receiver of synthesized gates. Synthesizers call begin() once, then add()
/// per gate in order; stage() marks algorithm phase boundaries.
class GateSink {
 public:
  virtual ~GateSink() = default;
  virtual void begin(const CircuitLayout& layout) = 0;
  virtual void add(Gate gate) = 0;
  virtual void stage(std::string_view /*label*/) {}
};

struct StageMark {
  std::string label;
  std::size_t gate_index;  // first gate of the stage
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(CircuitLayout layout);

  std::size_t width() const { return layout_.width; }
  const CircuitLayout& layout() const { return layout_; }
  const std::vector<Register>& registers() const { return layout_.registers; }
  const Register& reg(std::string_view name) const;
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<StageMark>& stages() const { return stages_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates against the width, then appends.
  void add(Gate gate);
  void mark_stage(std::string label);
  /// Appends all gates of `other`, which must share this layout.
  void append(const Circuit& other);

  /// Gates [0, end) in a circuit with the same layout.
  Circuit prefix(std::size_t end) const;
  /// Prefix ending just before the first stage labelled `label`.
  std::optional<Circuit> prefix_before(std::string_view label) const;

 private:
  CircuitLayout layout_;
  std::vector<Gate> gates_;
  std::vector<StageMark> stages_;
};

/// GateSink that materializes a Circuit.
class CircuitRecorder final : public GateSink {
 public:
  void begin(const CircuitLayout& layout) override;
  void add(Gate gate) override;
  void stage(std::string_view label) override;

  Circuit take() { return std::move(circuit_); }

 private:
  Circuit circuit_;
};

/// Circuit text format, one record per line:
///
///   qubits <width>
///   reg <NAME> <lo> <hi>          inclusive, 0-based global indices
///   init <q1> ... <qm>            qubits that start in |1> (optional)
///   X <t> | CX <c> <t> | CCX <c1> <c2> <t>
///   MCX <k> <c1> ... <ck> <t>
///   SPL <re> <im> <beta> <t>
///   CSPL <k> <c1> ... <ck> <re> <im> <beta> <t>
///
/// '#' starts a comment line. Stage marks travel as "# stage <label>"
/// comments placed before the first gate of the stage. Floats carry 17
/// significant digits.
void write_circuit(std::ostream& out, const Circuit& circuit);
Circuit read_circuit(std::istream& in);
Circuit read_circuit_file(const std::string& path);

}  // namespace sqsp

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
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "sqsp/circuit.hpp"
#include "sqsp/gate.hpp"

namespace sqsp {

enum class CountMode {
  /// One per IR gate; X and SPL are single-qubit, CX is a CNOT.
  high_level,
  /// Every gate expanded with the decompositions in decompose.hpp.
  elementary,
};

std::string_view mode_name(CountMode mode);
std::optional<CountMode> parse_mode(std::string_view text);

struct GateCounts {
  std::uint64_t total = 0;
  std::uint64_t cnot = 0;
  std::uint64_t single_qubit = 0;
  /// IR gates per GateKind, independent of the mode.
  std::array<std::uint64_t, kGateKindCount> by_kind{};
  /// Multi-controlled gates that touched every qubit of the circuit and were
  /// costed with one extra borrowed qubit (elementary mode only).
  std::uint64_t virtual_work = 0;

  std::uint64_t high_level_total() const;

  GateCounts& operator+=(const GateCounts& o);
  friend GateCounts operator+(GateCounts a, const GateCounts& b) {
    a += b;
    return a;
  }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Incremental counter. In elementary mode a multi-controlled gate borrows the
/// circuit's other qubits as dirty work space, so its cost depends on the
/// circuit width: the linear ladder when t - 2 qubits are free, the
/// one-borrowed-qubit split otherwise. Expansion counts are memoized per
/// (controls, construction).
class GateCounter {
 public:
  GateCounter(std::size_t width, CountMode mode) : width_(width), mode_(mode) {}

  void add(const Gate& gate);
  const GateCounts& counts() const { return counts_; }

 private:
  GateCounts mcx_cost(std::size_t controls);

  std::size_t width_;
  CountMode mode_;
  GateCounts counts_;
  std::map<std::pair<std::size_t, bool>, GateCounts> mcx_cache_;
};

/// GateSink that counts without materializing the circuit.
class CountingSink final : public GateSink {
 public:
  explicit CountingSink(CountMode mode) : mode_(mode) {}

  void begin(const CircuitLayout& layout) override;
  void add(Gate gate) override;

  const GateCounts& counts() const;
  const CircuitLayout& layout() const { return layout_; }

 private:
  CountMode mode_;
  CircuitLayout layout_;
  std::optional<GateCounter> counter_;
};

/// Serial reference count.
GateCounts count_gates(const Circuit& circuit, CountMode mode);
/// OpenMP reduction over the gate list; equal to count_gates.
GateCounts count_gates_parallel(const Circuit& circuit, CountMode mode);

}  // namespace sqsp

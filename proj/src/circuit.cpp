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

#include "sqsp/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "overloaded.hpp"
#include "sqsp/errors.hpp"
#include "text_io.hpp"

namespace sqsp {

using detail::Overloaded;

const Register* CircuitLayout::find(std::string_view name) const {
  for (const auto& r : registers) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

void CircuitLayout::validate() const {
  for (std::size_t i = 0; i < registers.size(); ++i) {
    const auto& r = registers[i];
    if (r.lo > r.hi || r.hi >= width) {
      throw InputError("register " + r.name + " [" + std::to_string(r.lo) +
                       ", " + std::to_string(r.hi) +
                       "] does not fit width " + std::to_string(width));
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& o = registers[j];
      if (o.name == r.name) throw InputError("duplicate register " + r.name);
      if (r.lo <= o.hi && o.lo <= r.hi) {
        throw InputError("registers " + o.name + " and " + r.name + " overlap");
      }
    }
  }
  for (Qubit q : initial_ones) {
    if (q >= width) {
      throw InputError("initial |1> qubit " + std::to_string(q) +
                       " out of range");
    }
  }
}

Circuit::Circuit(CircuitLayout layout) : layout_(std::move(layout)) {
  layout_.validate();
}

const Register& Circuit::reg(std::string_view name) const {
  if (const Register* r = layout_.find(name)) return *r;
  throw InputError("circuit has no register named " + std::string(name));
}

void Circuit::add(Gate gate) {
  validate_gate(gate, layout_.width);
  gates_.push_back(std::move(gate));
}

void Circuit::mark_stage(std::string label) {
  stages_.push_back({std::move(label), gates_.size()});
}

void Circuit::append(const Circuit& other) {
  if (!(other.layout_ == layout_)) {
    throw InputError("cannot append circuits with different layouts");
  }
  for (const auto& s : other.stages_) {
    stages_.push_back({s.label, s.gate_index + gates_.size()});
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::prefix(std::size_t end) const {
  Circuit out(layout_);
  end = std::min(end, gates_.size());
  out.gates_.assign(gates_.begin(), gates_.begin() + static_cast<std::ptrdiff_t>(end));
  for (const auto& s : stages_) {
    if (s.gate_index <= end) out.stages_.push_back(s);
  }
  return out;
}

std::optional<Circuit> Circuit::prefix_before(std::string_view label) const {
  for (const auto& s : stages_) {
    if (s.label == label) return prefix(s.gate_index);
  }
  return std::nullopt;
}

void CircuitRecorder::begin(const CircuitLayout& layout) {
  circuit_ = Circuit(layout);
}

void CircuitRecorder::add(Gate gate) { circuit_.add(std::move(gate)); }

void CircuitRecorder::stage(std::string_view label) {
  circuit_.mark_stage(std::string(label));
}

namespace {

void write_controls(std::ostream& out, const std::vector<Qubit>& controls) {
  out << ' ' << controls.size();
  for (Qubit c : controls) out << ' ' << c;
}

void write_spl(std::ostream& out, Complex alpha, double beta) {
  out << ' ' << detail::format_real(alpha.real()) << ' '
      << detail::format_real(alpha.imag()) << ' ' << detail::format_real(beta);
}

void write_gate(std::ostream& out, const Gate& gate) {
  out << kind_name(kind(gate));
  std::visit(Overloaded{
                 [&](const XGate& g) { out << ' ' << g.target; },
                 [&](const CnotGate& g) {
                   out << ' ' << g.control << ' ' << g.target;
                 },
                 [&](const ToffoliGate& g) {
                   out << ' ' << g.control1 << ' ' << g.control2 << ' '
                       << g.target;
                 },
                 [&](const McxGate& g) {
                   write_controls(out, g.controls);
                   out << ' ' << g.target;
                 },
                 [&](const SplGate& g) {
                   write_spl(out, g.alpha, g.beta);
                   out << ' ' << g.target;
                 },
                 [&](const CsplGate& g) {
                   write_controls(out, g.controls);
                   write_spl(out, g.alpha, g.beta);
                   out << ' ' << g.target;
                 },
             },
             gate);
  out << '\n';
}

Qubit qubit_at(const detail::Line& line, std::size_t i) {
  const std::size_t v = line.index(i);
  if (v > 0xffffffffu) line.fail(i, "qubit index too large");
  return static_cast<Qubit>(v);
}

// Parses "<k> c1 ... ck" starting at token `at`; returns the controls and
// advances `at` past them.
std::vector<Qubit> read_controls(const detail::Line& line, std::size_t& at) {
  const std::size_t k = line.index(at++);
  if (k == 0) line.fail(at - 1, "control count must be positive");
  if (line.tokens.size() < at + k) {
    line.fail(line.tokens.size(), "expected " + std::to_string(k) + " controls");
  }
  std::vector<Qubit> controls;
  controls.reserve(k);
  for (std::size_t i = 0; i < k; ++i) controls.push_back(qubit_at(line, at++));
  return controls;
}

Gate parse_gate(const detail::Line& line) {
  const auto op = line.tokens[0].text;
  if (op == "X") {
    line.expect_count(2, "X");
    return XGate{qubit_at(line, 1)};
  }
  if (op == "CX") {
    line.expect_count(3, "CX");
    return CnotGate{qubit_at(line, 1), qubit_at(line, 2)};
  }
  if (op == "CCX") {
    line.expect_count(4, "CCX");
    return ToffoliGate{qubit_at(line, 1), qubit_at(line, 2), qubit_at(line, 3)};
  }
  if (op == "MCX") {
    std::size_t at = 1;
    auto controls = read_controls(line, at);
    line.expect_count(at + 1, "MCX");
    return McxGate{std::move(controls), qubit_at(line, at)};
  }
  if (op == "SPL") {
    line.expect_count(5, "SPL");
    return SplGate{{line.real(1), line.real(2)}, line.real(3), qubit_at(line, 4)};
  }
  if (op == "CSPL") {
    std::size_t at = 1;
    auto controls = read_controls(line, at);
    line.expect_count(at + 4, "CSPL");
    return CsplGate{std::move(controls),
                    {line.real(at), line.real(at + 1)},
                    line.real(at + 2),
                    qubit_at(line, at + 3)};
  }
  line.fail(0, "unknown gate '" + std::string(op) + "'");
}

}  // namespace

void write_circuit(std::ostream& out, const Circuit& circuit) {
  const auto& layout = circuit.layout();
  out << "qubits " << layout.width << '\n';
  for (const auto& r : layout.registers) {
    out << "reg " << r.name << ' ' << r.lo << ' ' << r.hi << '\n';
  }
  if (!layout.initial_ones.empty()) {
    out << "init";
    for (Qubit q : layout.initial_ones) out << ' ' << q;
    out << '\n';
  }
  const auto& stages = circuit.stages();
  std::size_t next_stage = 0;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i <= gates.size(); ++i) {
    while (next_stage < stages.size() && stages[next_stage].gate_index == i) {
      out << "# stage " << stages[next_stage++].label << '\n';
    }
    if (i < gates.size()) write_gate(out, gates[i]);
  }
}

Circuit read_circuit(std::istream& in) {
  std::size_t line_no = 0;
  detail::Line line;
  std::vector<std::string> pending_stages;
  auto on_comment = [&](std::string_view body) {
    constexpr std::string_view kStage = " stage ";
    if (body.substr(0, kStage.size()) == kStage) {
      pending_stages.emplace_back(body.substr(kStage.size()));
    }
  };
  if (!detail::next_line(in, line_no, line, on_comment)) {
    throw ParseError(line_no + 1, 0, "empty circuit file");
  }
  line.expect_count(2, "header 'qubits <width>'");
  if (line.tokens[0].text != "qubits") line.fail(0, "expected 'qubits'");
  CircuitLayout layout;
  layout.width = line.index(1);

  bool have_line = detail::next_line(in, line_no, line, on_comment);
  for (; have_line; have_line = detail::next_line(in, line_no, line, on_comment)) {
    const auto op = line.tokens[0].text;
    if (op == "reg") {
      line.expect_count(4, "reg");
      layout.registers.push_back({std::string(line.tokens[1].text),
                                  qubit_at(line, 2), qubit_at(line, 3)});
    } else if (op == "init") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        layout.initial_ones.push_back(qubit_at(line, i));
      }
    } else {
      break;
    }
  }
  try {
    layout.validate();
  } catch (const InputError& e) {
    throw ParseError(line_no, 0, e.what());
  }

  Circuit circuit(std::move(layout));
  auto flush_stages = [&] {
    for (auto& label : pending_stages) circuit.mark_stage(std::move(label));
    pending_stages.clear();
  };
  for (; have_line; have_line = detail::next_line(in, line_no, line, on_comment)) {
    flush_stages();
    Gate gate = parse_gate(line);
    try {
      circuit.add(std::move(gate));
    } catch (const InputError& e) {
      throw ParseError(line.number, 0, e.what());
    }
  }
  flush_stages();
  return circuit;
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open circuit file '" + path + "'");
  return read_circuit(in);
}

}  // namespace sqsp

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

#include "sqsp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "overloaded.hpp"
#include "sqsp/errors.hpp"

namespace sqsp {

using detail::Overloaded;
using Kind = ElementaryGate::Kind;

Matrix2 spl_matrix(Complex alpha, double beta) {
  if (!(beta > 0.0)) {
    throw std::domain_error("split gate requires beta > 0");
  }
  const double mag = std::abs(alpha);
  if (!(mag <= beta + kSplSlack)) {
    throw std::domain_error("split gate requires |alpha| <= beta, got |alpha| = " +
                            std::to_string(mag) + ", beta = " +
                            std::to_string(beta));
  }
  const double radicand = (beta - mag) * (beta + mag);
  const double root = radicand > 0.0 ? std::sqrt(radicand) : 0.0;
  return {{{Complex(-root / beta), alpha / beta},
           {std::conj(alpha) / beta, Complex(root / beta)}}};
}

Matrix2 spl_diagonalizer(Complex alpha, double beta) {
  const Matrix2 m = spl_matrix(alpha, beta);
  // Column 2 of the split matrix gives sqrt(beta^2 - |alpha|^2)/beta.
  const double a = m[1][1].real() * beta;
  // +1 eigenvector (alpha, a + beta), -1 eigenvector (-(a + beta), conj(alpha)).
  const double norm = std::sqrt(std::norm(alpha) + (a + beta) * (a + beta));
  const Complex v0 = alpha / norm;
  const Complex v1 = (a + beta) / norm;
  const Complex u0 = -(a + beta) / norm;
  const Complex u1 = std::conj(alpha) / norm;
  // W = [v u] . H
  const double h = std::numbers::sqrt2 / 2.0;
  return {{{(v0 + u0) * h, (v0 - u0) * h}, {(v1 + u1) * h, (v1 - u1) * h}}};
}

Matrix2 adjoint(const Matrix2& m) {
  return {{{std::conj(m[0][0]), std::conj(m[1][0])},
           {std::conj(m[0][1]), std::conj(m[1][1])}}};
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return out;
}

ElementaryGate single_qubit(Kind kind, Qubit target) {
  const double h = std::numbers::sqrt2 / 2.0;
  const Complex t_phase = std::polar(1.0, std::numbers::pi / 4);
  Matrix2 m{};
  switch (kind) {
    case Kind::H:
      m = {{{h, h}, {h, -h}}};
      break;
    case Kind::S:
      m = {{{1.0, 0.0}, {0.0, Complex(0.0, 1.0)}}};
      break;
    case Kind::T:
      m = {{{1.0, 0.0}, {0.0, t_phase}}};
      break;
    case Kind::Tdg:
      m = {{{1.0, 0.0}, {0.0, std::conj(t_phase)}}};
      break;
    case Kind::X:
      m = {{{0.0, 1.0}, {1.0, 0.0}}};
      break;
    case Kind::U:
    case Kind::CX:
      throw std::invalid_argument("single_qubit: kind needs explicit data");
  }
  return {kind, target, 0, m};
}

ElementaryGate unitary_gate(const Matrix2& m, Qubit target) {
  return {Kind::U, target, 0, m};
}

ElementaryGate cnot(Qubit control, Qubit target) {
  return {Kind::CX, target, control, {}};
}

std::vector<ElementaryGate> decompose_toffoli(const ToffoliGate& gate) {
  const Qubit a = gate.control1;
  const Qubit b = gate.control2;
  const Qubit c = gate.target;
  return {
      single_qubit(Kind::H, c),   cnot(b, c),
      single_qubit(Kind::Tdg, c), cnot(a, c),
      single_qubit(Kind::T, c),   cnot(b, c),
      single_qubit(Kind::Tdg, c), cnot(a, c),
      single_qubit(Kind::Tdg, b), single_qubit(Kind::T, c),
      cnot(a, b),                 single_qubit(Kind::H, c),
      single_qubit(Kind::Tdg, b), cnot(a, b),
      single_qubit(Kind::T, a),   single_qubit(Kind::S, b),
  };
}

namespace {

void ladder(std::span<const Qubit> c, Qubit x, std::span<const Qubit> a,
            std::vector<Gate>& out) {
  const std::size_t t = c.size();
  auto half = [&] {
    out.push_back(ToffoliGate{c[t - 1], a[t - 3], x});
    for (std::size_t i = t - 2; i >= 2; --i) {
      out.push_back(ToffoliGate{c[i], a[i - 2], a[i - 1]});
    }
    out.push_back(ToffoliGate{c[0], c[1], a[0]});
    for (std::size_t i = 2; i <= t - 2; ++i) {
      out.push_back(ToffoliGate{c[i], a[i - 2], a[i - 1]});
    }
  };
  half();
  half();
}

void append_mcx(std::vector<Qubit> controls, Qubit target,
                std::span<const Qubit> work, std::vector<Gate>& out) {
  if (controls.size() <= 2) {
    out.push_back(controlled_x(std::move(controls), target));
    return;
  }
  const std::size_t t = controls.size();
  if (work.size() >= t - 2) {
    ladder(controls, target, work, out);
    return;
  }
  // One borrowed qubit b: x ^= g2 & b twice around b ^= g1, leaving b intact.
  const Qubit b = work[0];
  const auto rest = work.subspan(1);
  const std::size_t m1 = (t + 1) / 2;
  std::vector<Qubit> g1(controls.begin(), controls.begin() + static_cast<std::ptrdiff_t>(m1));
  std::vector<Qubit> g2(controls.begin() + static_cast<std::ptrdiff_t>(m1), controls.end());

  std::vector<Qubit> work1(g2);
  work1.push_back(target);
  work1.insert(work1.end(), rest.begin(), rest.end());
  std::vector<Qubit> controls2(g2);
  controls2.push_back(b);
  std::vector<Qubit> work2(g1);
  work2.insert(work2.end(), rest.begin(), rest.end());

  std::vector<Gate> step1;
  append_mcx(g1, b, work1, step1);
  std::vector<Gate> step2;
  append_mcx(controls2, target, work2, step2);
  for (int rep = 0; rep < 2; ++rep) {
    out.insert(out.end(), step1.begin(), step1.end());
    out.insert(out.end(), step2.begin(), step2.end());
  }
}

}  // namespace

std::vector<Gate> decompose_mcx(const McxGate& gate, std::span<const Qubit> work) {
  const std::size_t t = gate.controls.size();
  if (t == 0) throw InputError("MCX needs at least one control");
  std::vector<Qubit> used(gate.controls);
  used.push_back(gate.target);
  used.insert(used.end(), work.begin(), work.end());
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
    throw InputError("MCX controls, target and work qubits must be distinct");
  }
  if (t >= 3 && work.empty()) {
    throw InputError("MCX with " + std::to_string(t) +
                     " controls needs at least 1 work qubit (" +
                     std::to_string(t - 2) + " for the linear ladder)");
  }
  std::vector<Gate> out;
  append_mcx(gate.controls, gate.target, work, out);
  return out;
}

CsplDecomposition decompose_cspl(const CsplGate& gate) {
  const Matrix2 w = spl_diagonalizer(gate.alpha, gate.beta);
  return {unitary_gate(adjoint(w), gate.target),
          controlled_x(gate.controls, gate.target), unitary_gate(w, gate.target)};
}

namespace {

std::vector<Qubit> free_qubits(std::size_t width, const Gate& gate,
                               std::size_t wanted) {
  std::vector<Qubit> busy = controls_of(gate);
  busy.push_back(target_of(gate));
  std::sort(busy.begin(), busy.end());
  std::vector<Qubit> out;
  for (Qubit q = 0; q < width && out.size() < wanted; ++q) {
    if (!std::binary_search(busy.begin(), busy.end(), q)) out.push_back(q);
  }
  return out;
}

void lower(const Gate& gate, std::size_t width, std::vector<ElementaryGate>& out) {
  std::visit(
      Overloaded{
          [&](const XGate& g) { out.push_back(single_qubit(Kind::X, g.target)); },
          [&](const CnotGate& g) { out.push_back(cnot(g.control, g.target)); },
          [&](const ToffoliGate& g) {
            const auto seq = decompose_toffoli(g);
            out.insert(out.end(), seq.begin(), seq.end());
          },
          [&](const McxGate& g) {
            const auto work =
                free_qubits(width, gate, mcx_ladder_work(g.controls.size()));
            for (const Gate& sub : decompose_mcx(g, work)) lower(sub, width, out);
          },
          [&](const SplGate& g) {
            out.push_back(unitary_gate(spl_matrix(g.alpha, g.beta), g.target));
          },
          [&](const CsplGate& g) {
            const auto d = decompose_cspl(g);
            out.push_back(d.before);
            lower(d.controlled_x, width, out);
            out.push_back(d.after);
          },
      },
      gate);
}

}  // namespace

std::vector<ElementaryGate> lower_to_elementary(const Circuit& circuit) {
  std::vector<ElementaryGate> out;
  for (const Gate& g : circuit.gates()) lower(g, circuit.width(), out);
  return out;
}

}  // namespace sqsp

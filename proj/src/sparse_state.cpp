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

#include "sqsp/sparse_state.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include "sqsp/errors.hpp"
#include "text_io.hpp"

namespace sqsp {

SparseState::SparseState(std::size_t n, std::vector<Term> terms)
    : n_(n), terms_(std::move(terms)) {
  if (n_ == 0) throw InputError("state must have at least one qubit");
  if (terms_.empty()) throw InputError("state must have at least one term");
  std::unordered_set<BasisString, BasisStringHash> seen;
  double norm = 0.0;
  for (const auto& term : terms_) {
    if (term.bits.size() != n_) {
      throw InputError("bitstring " + term.bits.to_string() + " has length " +
                       std::to_string(term.bits.size()) + ", expected " +
                       std::to_string(n_));
    }
    if (!seen.insert(term.bits).second) {
      throw InputError("duplicate bitstring " + term.bits.to_string());
    }
    if (!(std::abs(term.amplitude) >= kMinAmplitude)) {
      throw InputError("zero amplitude for " + term.bits.to_string());
    }
    norm += std::norm(term.amplitude);
  }
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw InputError("state is not normalized: sum |c|^2 = " +
                     detail::format_real(norm));
  }
}

std::vector<BasisString> SparseState::support() const {
  std::vector<BasisString> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back(term.bits);
  return out;
}

SparseState read_state(std::istream& in) {
  std::size_t line_no = 0;
  detail::Line line;
  if (!detail::next_line(in, line_no, line)) {
    throw ParseError(line_no + 1, 0, "empty state file");
  }
  line.expect_count(4, "header 'n <qubits> s <terms>'");
  if (line.tokens[0].text != "n") line.fail(0, "expected 'n'");
  if (line.tokens[2].text != "s") line.fail(2, "expected 's'");
  const std::size_t n = line.index(1);
  const std::size_t s = line.index(3);
  if (n == 0) line.fail(1, "qubit count must be positive");

  std::vector<Term> terms;
  terms.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    if (!detail::next_line(in, line_no, line)) {
      throw ParseError(line_no + 1, 0,
                       "expected " + std::to_string(s) + " terms, found " +
                           std::to_string(j));
    }
    line.expect_count(3, "term '<bitstring> <re> <im>'");
    if (line.tokens[0].text.size() != n) {
      line.fail(0, "bitstring length " +
                       std::to_string(line.tokens[0].text.size()) +
                       " does not match n = " + std::to_string(n));
    }
    BasisString bits;
    try {
      bits = BasisString::parse(line.tokens[0].text);
    } catch (const InputError& e) {
      line.fail(0, e.what());
    }
    terms.push_back({std::move(bits), {line.real(1), line.real(2)}});
  }
  if (detail::next_line(in, line_no, line)) {
    line.fail(0, "unexpected content after " + std::to_string(s) + " terms");
  }
  return SparseState(n, std::move(terms));
}

SparseState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open state file '" + path + "'");
  return read_state(in);
}

void write_state(std::ostream& out, const SparseState& state) {
  out << "n " << state.num_qubits() << " s " << state.sparsity() << '\n';
  for (const auto& term : state.terms()) {
    out << term.bits.to_string() << ' '
        << detail::format_real(term.amplitude.real()) << ' '
        << detail::format_real(term.amplitude.imag()) << '\n';
  }
}

}  // namespace sqsp

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
#include <cstdint>
#include <span>
#include <vector>

#include "sqsp/basis_string.hpp"

namespace sqsp {

struct PathResult {
  std::vector<BasisString> order;
  /// Sum of Hamming distances between consecutive strings.
  std::uint64_t length = 0;
};

std::uint64_t path_length(std::span<const BasisString> order);

/// Nearest-neighbour order: start at the minimum-weight string, then always
/// move to the closest unvisited string. Ties go to the lexicographically
/// smaller string. Throws InputError on an empty, ragged or repeating set.
PathResult greedy_path(std::span<const BasisString> strings);

inline constexpr std::size_t kOptimalPathBudget = 15;

/// Shortest Hamiltonian path by Held-Karp over all start points; among
/// shortest paths the lexicographically smallest order wins. Throws
/// BudgetExceeded above kOptimalPathBudget strings and InputError as
/// greedy_path does.
PathResult optimal_path(std::span<const BasisString> strings);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// All weight-k strings of length n in revolving-door order: consecutive
/// strings differ by moving a single 1, so every hop has Hamming distance 2.
/// The first string is 1^k 0^(n-k). Each call to next() does constant work
/// besides copying the string out.
class ConstantWeightPath {
 public:
  /// Throws InputError if k > n.
  ConstantWeightPath(std::size_t n, std::size_t k);

  /// Writes the next string into `out`; false after the last one.
  bool next(BasisString& out);
  std::uint64_t count() const { return binomial(n_, k_); }
  std::uint64_t length() const;

 private:
  void advance();
  void move(std::size_t from, std::size_t to);

  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> c_;  // c_[1..k], c_[k+1] = n
  BasisString bits_;
  bool started_ = false;
  bool done_ = false;
};

/// Materialized ConstantWeightPath.
PathResult constant_weight_path(std::size_t n, std::size_t k);

}  // namespace sqsp

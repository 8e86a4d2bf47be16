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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sqsp {

/// Fixed-length bit vector naming a computational basis state.
///
/// Position 0 is the leftmost character of the textual form, so "0110" has
/// bits 1 and 2 set. When a BasisString keys a simulator state, position q is
/// the value of global qubit q.
class BasisString {
 public:
  BasisString() = default;
  explicit BasisString(std::size_t size);

  /// Parses a string of '0'/'1' characters. Throws InputError on any other
  /// character.
  static BasisString parse(std::string_view text);

  std::size_t size() const { return size_; }

  bool test(std::size_t pos) const {
    return (words_[pos >> 6] >> (pos & 63)) & 1u;
  }
  void set(std::size_t pos, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (pos & 63);
    if (value) {
      words_[pos >> 6] |= mask;
    } else {
      words_[pos >> 6] &= ~mask;
    }
  }
  void flip(std::size_t pos) { words_[pos >> 6] ^= std::uint64_t{1} << (pos & 63); }

  std::size_t weight() const;
  /// Complement of every bit.
  BasisString flipped() const;
  /// Positions holding 1, ascending.
  std::vector<std::size_t> ones() const;

  BasisString& operator^=(const BasisString& other);
  friend BasisString operator^(BasisString a, const BasisString& b) {
    a ^= b;
    return a;
  }

  /// Copy of positions [lo, lo + count).
  BasisString slice(std::size_t lo, std::size_t count) const;
  /// Overwrites positions [lo, lo + other.size()) with `other`.
  void assign(std::size_t lo, const BasisString& other);
  /// True when positions [lo, lo + count) are all zero.
  bool zero_in(std::size_t lo, std::size_t count) const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const BasisString&, const BasisString&) = default;
  /// Lexicographic order of the textual form.
  friend std::strong_ordering operator<=>(const BasisString& a,
                                          const BasisString& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BasisString& a, const BasisString& b);

struct BasisStringHash {
  std::size_t operator()(const BasisString& s) const { return s.hash(); }
};

}  // namespace sqsp

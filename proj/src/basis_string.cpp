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

#include "sqsp/basis_string.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "sqsp/errors.hpp"

namespace sqsp {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BasisString::BasisString(std::size_t size)
    : size_(size), words_(word_count(size), 0) {}

BasisString BasisString::parse(std::string_view text) {
  BasisString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0':
        break;
      case '1':
        out.set(i);
        break;
      default:
        throw InputError("invalid character '" + std::string(1, text[i]) +
                         "' at position " + std::to_string(i + 1) +
                         " of bitstring");
    }
  }
  return out;
}

std::size_t BasisString::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

BasisString BasisString::flipped() const {
  BasisString out(*this);
  for (auto& word : out.words_) word = ~word;
  if (const std::size_t tail = size_ & 63; tail != 0) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

std::vector<std::size_t> BasisString::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

BasisString& BasisString::operator^=(const BasisString& other) {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BasisString BasisString::slice(std::size_t lo, std::size_t count) const {
  BasisString out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (test(lo + i)) out.set(i);
  }
  return out;
}

void BasisString::assign(std::size_t lo, const BasisString& other) {
  for (std::size_t i = 0; i < other.size(); ++i) set(lo + i, other.test(i));
}

bool BasisString::zero_in(std::size_t lo, std::size_t count) const {
  for (std::size_t i = lo; i < lo + count; ++i) {
    if (test(i)) return false;
  }
  return true;
}

std::string BasisString::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::size_t BasisString::hash() const {
  // splitmix64 finalizer per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (std::uint64_t word : words_) {
    std::uint64_t z = word + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BasisString& a, const BasisString& b) {
  const std::size_t common = std::min(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < common; ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const std::size_t pos = w * 64 + std::countr_zero(diff);
    if (pos >= a.size_ || pos >= b.size_) break;
    return a.test(pos) ? std::strong_ordering::greater
                       : std::strong_ordering::less;
  }
  return a.size_ <=> b.size_;
}

std::size_t hamming_distance(const BasisString& a, const BasisString& b) {
  return (a ^ b).weight();
}

}  // namespace sqsp

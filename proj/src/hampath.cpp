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

#include "sqsp/hampath.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "sqsp/errors.hpp"

namespace sqsp {

namespace {

void check_set(std::span<const BasisString> strings) {
  if (strings.empty()) throw InputError("path needs at least one string");
  std::unordered_set<BasisString, BasisStringHash> seen;
  for (const auto& s : strings) {
    if (s.size() != strings.front().size()) {
      throw InputError("path strings differ in length");
    }
    if (!seen.insert(s).second) {
      throw InputError("duplicate string " + s.to_string());
    }
  }
}

}  // namespace

std::uint64_t path_length(std::span<const BasisString> order) {
  std::uint64_t total = 0;
  for (std::size_t j = 1; j < order.size(); ++j) {
    total += hamming_distance(order[j - 1], order[j]);
  }
  return total;
}

PathResult greedy_path(std::span<const BasisString> strings) {
  check_set(strings);
  std::vector<BasisString> pool(strings.begin(), strings.end());
  std::sort(pool.begin(), pool.end());

  std::size_t start = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (pool[i].weight() < pool[start].weight()) start = i;
  }
  std::vector<char> used(pool.size(), 0);
  PathResult out;
  out.order.reserve(pool.size());
  std::size_t cur = start;
  used[cur] = 1;
  out.order.push_back(pool[cur]);
  for (std::size_t step = 1; step < pool.size(); ++step) {
    std::size_t best = pool.size();
    std::size_t best_hd = std::numeric_limits<std::size_t>::max();
    // pool is sorted, so strict < keeps the lexicographically first tie
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      const std::size_t hd = hamming_distance(pool[cur], pool[i]);
      if (hd < best_hd) {
        best_hd = hd;
        best = i;
      }
    }
    used[best] = 1;
    out.length += best_hd;
    out.order.push_back(pool[best]);
    cur = best;
  }
  return out;
}

PathResult optimal_path(std::span<const BasisString> strings) {
  if (strings.size() > kOptimalPathBudget) {
    throw BudgetExceeded("exact path search is limited to " +
                         std::to_string(kOptimalPathBudget) + " strings, got " +
                         std::to_string(strings.size()));
  }
  check_set(strings);
  std::vector<BasisString> pool(strings.begin(), strings.end());
  std::sort(pool.begin(), pool.end());
  const std::size_t m = pool.size();
  const std::size_t full = (std::size_t{1} << m) - 1;

  std::vector<std::uint32_t> dist(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      dist[a * m + b] = static_cast<std::uint32_t>(hamming_distance(pool[a], pool[b]));
    }
  }

  // rest[mask * m + v]: cheapest way to visit everything outside `mask`
  // starting from v, where v is in mask. Masks are filled from the top so
  // every superset is ready.
  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> rest((full + 1) * m, kInf);
  for (std::size_t v = 0; v < m; ++v) rest[full * m + v] = 0;
  for (std::size_t mask = full; mask-- > 0;) {
    for (std::size_t v = 0; v < m; ++v) {
      if (!(mask >> v & 1)) continue;
      std::uint32_t best = kInf;
      for (std::size_t u = 0; u < m; ++u) {
        if (mask >> u & 1) continue;
        const std::uint32_t tail = rest[(mask | std::size_t{1} << u) * m + u];
        if (tail != kInf) best = std::min(best, dist[v * m + u] + tail);
      }
      rest[mask * m + v] = best;
    }
  }

  std::size_t cur = 0;
  for (std::size_t v = 1; v < m; ++v) {
    if (rest[(std::size_t{1} << v) * m + v] < rest[(std::size_t{1} << cur) * m + cur]) {
      cur = v;
    }
  }
  PathResult out;
  std::size_t mask = std::size_t{1} << cur;
  out.length = rest[mask * m + cur];
  out.order.push_back(pool[cur]);
  while (mask != full) {
    const std::uint32_t want = rest[mask * m + cur];
    for (std::size_t u = 0; u < m; ++u) {
      if (mask >> u & 1) continue;
      const std::size_t next = mask | std::size_t{1} << u;
      if (dist[cur * m + u] + rest[next * m + u] == want) {
        mask = next;
        cur = u;
        break;
      }
    }
    out.order.push_back(pool[cur]);
  }
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

ConstantWeightPath::ConstantWeightPath(std::size_t n, std::size_t k)
    : n_(n), k_(k), c_(k + 2), bits_(n) {
  if (k > n) {
    throw InputError("weight " + std::to_string(k) + " exceeds length " +
                     std::to_string(n));
  }
  for (std::size_t j = 1; j <= k; ++j) {
    c_[j] = j - 1;
    bits_.set(j - 1);
  }
  c_[k + 1] = n;
}

std::uint64_t ConstantWeightPath::length() const {
  const std::uint64_t c = count();
  return c == 0 ? 0 : 2 * (c - 1);
}

bool ConstantWeightPath::next(BasisString& out) {
  if (done_) return false;
  if (started_) {
    advance();
    if (done_) return false;
  }
  started_ = true;
  out = bits_;
  return true;
}

void ConstantWeightPath::move(std::size_t from, std::size_t to) {
  bits_.set(from, false);
  bits_.set(to);
}

// Revolving-door successor over c_k > ... > c_1.
void ConstantWeightPath::advance() {
  const std::size_t t = k_;
  if (t == 0 || t == n_) {
    done_ = true;
    return;
  }
  if (t == 1) {
    if (c_[1] + 1 == n_) {
      done_ = true;
    } else {
      move(c_[1], c_[1] + 1);
      ++c_[1];
    }
    return;
  }
  std::size_t j = 2;
  bool decrease = true;
  if (t % 2 == 1) {
    if (c_[1] + 1 < c_[2]) {
      move(c_[1], c_[1] + 1);
      ++c_[1];
      return;
    }
  } else {
    if (c_[1] > 0) {
      move(c_[1], c_[1] - 1);
      --c_[1];
      return;
    }
    decrease = false;
  }
  for (;;) {
    if (decrease) {
      // c_j == c_{j-1} + 1
      if (c_[j] >= j) {
        move(c_[j], j - 2);
        c_[j] = c_[j - 1];
        c_[j - 1] = j - 2;
        return;
      }
      ++j;
    }
    // c_{j-1} == j - 2
    if (j > t) break;
    if (c_[j] + 1 < c_[j + 1]) {
      move(c_[j - 1], c_[j] + 1);
      c_[j - 1] = c_[j];
      ++c_[j];
      return;
    }
    ++j;
    if (j > t) break;
    decrease = true;
  }
  done_ = true;
}

PathResult constant_weight_path(std::size_t n, std::size_t k) {
  ConstantWeightPath gen(n, k);
  PathResult out;
  BasisString s;
  while (gen.next(s)) out.order.push_back(s);
  out.length = path_length(out.order);
  return out;
}

}  // namespace sqsp

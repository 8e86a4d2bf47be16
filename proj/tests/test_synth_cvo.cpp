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

#include <gtest/gtest.h>

#include <random>

#include "sqsp/bench.hpp"
#include "sqsp/cost.hpp"
#include "sqsp/gamma.hpp"
#include "sqsp/sparse_sim.hpp"
#include "sqsp/synth_cvo.hpp"

namespace sqsp {
namespace {

BasisString bs(const char* t) { return BasisString::parse(t); }

TEST(Gamma, ScheduleInvariants) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const SparseState st = random_sparse_state(6, 1 + rng() % 40, rng());
    std::vector<Complex> amps;
    for (const auto& t : st.terms()) amps.push_back(t.amplitude);
    const auto g = gamma_schedule(amps);
    ASSERT_EQ(g.size(), amps.size());
    EXPECT_NEAR(g.front(), 1.0, 1e-12);
    EXPECT_NEAR(g.back(), std::abs(amps.back()), 1e-9);
    double loaded = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      EXPECT_NEAR(g[j], std::sqrt(std::max(0.0, 1.0 - loaded)), 1e-9);
      EXPECT_LE(std::abs(amps[j]), g[j]);
      if (j > 0) EXPECT_LE(g[j], g[j - 1]);
      loaded += std::norm(amps[j]);
    }
  }
}

TEST(Cvo, LoadOrderSortsByWeightThenText) {
  const SparseState st(3, {{bs("110"), 0.5}, {bs("001"), 0.5}, {bs("100"), 0.5}, {bs("000"), 0.5}});
  std::vector<std::string> got;
  for (const auto& t : cvo_load_order(st)) got.push_back(t.bits.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"000", "001", "100", "110"}));
}

TEST(Cvo, ZeroStringIsOneUncontrolledSplit) {
  const SparseState st(4, {{bs("0000"), 1.0}});
  const Circuit c = synth_cvo(st);
  ASSERT_EQ(c.size(), 1u);
  const auto& g = std::get<SplGate>(c.gates()[0]);
  EXPECT_EQ(g.alpha, Complex(1.0));
  EXPECT_EQ(g.beta, 1.0);
  EXPECT_EQ(g.target, 4u);
  EXPECT_NEAR(assert_prepares(c, st), 1.0, 1e-12);
}

TEST(Cvo, Ghz) {
  const double h = std::sqrt(0.5);
  const SparseState st(3, {{bs("000"), h}, {bs("111"), h}});
  EXPECT_NEAR(assert_prepares(synth_cvo(st), st), 1.0, 1e-12);
}

TEST(Cvo, FlagCnotsAreTwiceTotalWeight) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    const SparseState st = random_sparse_state(12, 1 + rng() % 30, rng());
    std::uint64_t weight = 0;
    for (const auto& t : st.terms()) weight += t.bits.weight();
    const GateCounts c = count_gates(synth_cvo(st), CountMode::high_level);
    EXPECT_EQ(c.cnot, 2 * weight);
  }
}

TEST(Cvo, StageInvariant) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t s = 1 + rng() % std::min<std::size_t>(10, std::size_t{1} << n);
    const SparseState st = random_sparse_state(n, s, rng());
    const Circuit c = synth_cvo(st);
    const auto order = cvo_load_order(st);
    double loaded = 0.0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      const auto prefix = c.prefix_before("term " + std::to_string(j + 1));
      ASSERT_TRUE(prefix.has_value());
      const SimState state = run(*prefix);
      EXPECT_EQ(state.support_size(), j + 1);
      for (std::size_t i = 0; i < j; ++i) {
        BasisString key(n + 1);
        key.assign(0, order[i].bits);
        EXPECT_NEAR(std::abs(state.amplitude(key) - order[i].amplitude), 0.0, 1e-9);
      }
      BasisString reservoir(n + 1);
      reservoir.set(n);
      EXPECT_NEAR(std::abs(state.amplitude(reservoir) - std::sqrt(1.0 - loaded)), 0.0, 1e-9);
      loaded += std::norm(order[j].amplitude);
    }
    EXPECT_NEAR(assert_prepares(c, st), 1.0, 1e-9);
  }
}

TEST(Cvo, AllOnesWorstCaseIsLinearInSN) {
  // Strings with n-1 or n ones.
  std::vector<double> ratios;
  for (std::size_t n : {8u, 16u, 32u, 64u, 128u}) {
    std::vector<Term> terms;
    std::string text(n, '1');
    terms.push_back({BasisString::parse(text), 1.0});
    for (std::size_t i = 0; i < n; ++i) {
      std::string t = text;
      t[i] = '0';
      terms.push_back({BasisString::parse(t), 1.0});
    }
    const double norm = std::sqrt(static_cast<double>(terms.size()));
    for (auto& t : terms) t.amplitude /= norm;
    const SparseState st(n, terms);
    const GateCounts c = count_gates(synth_cvo(st), CountMode::elementary);
    const double ratio = static_cast<double>(c.total) / static_cast<double>(n * st.sparsity());
    EXPECT_GT(ratio, 1.0);
    ratios.push_back(ratio);
  }
  // growth factor shrinks towards 1
  for (std::size_t i = 2; i < ratios.size(); ++i) {
    EXPECT_LT(ratios[i] / ratios[i - 1], ratios[i - 1] / ratios[i - 2]);
  }
  EXPECT_LT(ratios.back() / ratios[ratios.size() - 2], 1.05);
  EXPECT_LT(ratios.back(), 200.0);
}

}  // namespace
}  // namespace sqsp

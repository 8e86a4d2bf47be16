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
#include "sqsp/errors.hpp"
#include "sqsp/gamma.hpp"
#include "sqsp/sparse_sim.hpp"
#include "sqsp/synth_be.hpp"
#include "sqsp/synth_cvo.hpp"

namespace sqsp {
namespace {

BasisString bs(const char* t) { return BasisString::parse(t); }

TEST(BatchParams, Choice) {
  EXPECT_EQ(choose_params(1024, 1024), (BatchParams{6, 64, 960}));
  EXPECT_EQ(choose_params(2, 2), (BatchParams{1, 2, 0}));
  EXPECT_EQ(choose_params(4096, 4096), (BatchParams{8, 256, 3840}));
  EXPECT_EQ(choose_params(1024, 3), (BatchParams{3, 8, 1016}));
  EXPECT_THROW(choose_params(1024, 1024, 10), InputError);
  EXPECT_EQ(choose_params(1024, 1024, 9), (BatchParams{9, 512, 512}));
  EXPECT_EQ(choose_params(2, 1, 1), (BatchParams{1, 2, 0}));
  EXPECT_THROW(choose_params(1, 1), InputError);
  for (std::size_t n = 2; n <= 5000; n += 37) {
    const BatchParams p = choose_params(n, n);
    EXPECT_GE(p.k, 1u);
    EXPECT_LE(p.t, n);
    EXPECT_EQ(p.t, std::size_t{1} << p.k);
    EXPECT_EQ(p.r, n - p.t);
    if (n > 2) EXPECT_LT(std::size_t{1} << p.k, n);
  }
}

TEST(Elimination, SixBitInstance) {
  const std::vector<BasisString> batch{bs("001101"), bs("010111")};
  const BatchParams p{2, 4, 2};
  const Elimination e = plan_elimination(batch, p);
  EXPECT_EQ(e.plan.kept, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(e.plan.removed, (std::vector<std::size_t>{4, 5}));
  // positions 5 and 6 (1-based) copy positions 2 and 4
  EXPECT_EQ(e.plan.representative, (std::vector<std::size_t>{1, 3}));
  ASSERT_EQ(e.circuit.size(), 2u);
  const auto& g0 = std::get<CnotGate>(e.circuit.gates()[0]);
  const auto& g1 = std::get<CnotGate>(e.circuit.gates()[1]);
  EXPECT_EQ(g0.control, 1u);
  EXPECT_EQ(g0.target, 4u);
  EXPECT_EQ(g1.control, 3u);
  EXPECT_EQ(g1.target, 5u);
  EXPECT_EQ(e.eliminated[0].to_string(), "001100");
  EXPECT_EQ(e.eliminated[1].to_string(), "010100");
}

TEST(Elimination, SinglePattern) {
  const std::vector<BasisString> batch{bs("11111111"), bs("00000000")};
  const BatchParams p = choose_params(8, 2, 2);
  const Elimination e = plan_elimination(batch, p);
  EXPECT_EQ(e.circuit.size(), p.r);
  for (const auto& x : e.eliminated) {
    for (std::size_t i : e.plan.removed) EXPECT_FALSE(x.test(i));
  }
}

// Applies the CNOT list to each string as a classical linear map.
TEST(Elimination, RandomBatchesBruteForce) {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 16;
    const std::size_t k = 1 + rng() % 3;
    const BatchParams p{k, std::size_t{1} << k, n - (std::size_t{1} << k)};
    const SparseState st = random_sparse_state(n, k, rng());
    const auto batch = st.support();
    const Elimination e = plan_elimination(batch, p);
    ASSERT_EQ(e.circuit.size(), p.r);
    for (std::size_t j = 0; j < batch.size(); ++j) {
      BasisString x = batch[j];
      for (const Gate& g : e.circuit.gates()) {
        const auto& cx = std::get<CnotGate>(g);
        if (x.test(cx.control)) x.flip(cx.target);
      }
      EXPECT_EQ(x, e.eliminated[j]);
      for (std::size_t i : e.plan.removed) EXPECT_FALSE(x.test(i));
    }
    for (std::size_t a = 0; a < batch.size(); ++a) {
      for (std::size_t b = a + 1; b < batch.size(); ++b) {
        EXPECT_NE(e.eliminated[a], e.eliminated[b]);
      }
    }
  }
}

TEST(Elimination, Errors) {
  const BatchParams p{1, 2, 2};
  EXPECT_THROW(plan_elimination({}, p), InputError);
  const std::vector<BasisString> two{bs("0001"), bs("0010")};
  EXPECT_THROW(plan_elimination(two, p), InputError);
}

TEST(Be, SingleBatch) {
  std::mt19937_64 rng(4);
  const SparseState st = random_sparse_state(8, 2, rng());
  const Circuit c = synth_be(st, choose_params(8, 2, 2));
  std::size_t batches = 0;
  for (const auto& m : c.stages()) batches += m.label.rfind("batch ", 0) == 0;
  EXPECT_EQ(batches, 1u);
  EXPECT_NEAR(assert_prepares(c, st), 1.0, 1e-9);
}

TEST(Be, NoEliminatedPositions) {
  const double h = std::sqrt(0.5);
  for (const auto& st : {SparseState(2, {{bs("01"), h}, {bs("10"), h}}),
                         SparseState(2, {{bs("00"), 0.5}, {bs("01"), 0.5},
                                         {bs("10"), 0.5}, {bs("11"), -0.5}})}) {
    const Circuit c = synth_be(st);
    EXPECT_NEAR(assert_prepares(c, st), 1.0, 1e-12);
  }
}

TEST(Be, RandomMediumState) {
  const SparseState st = random_sparse_state(32, 12, 12345);
  const VerificationReport r = verify_preparation(synth_be(st), st);
  EXPECT_TRUE(r.exact) << r.summary();
  EXPECT_TRUE(r.ancillas_clean);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
}

TEST(Be, OverrideK) {
  const SparseState st = random_sparse_state(16, 9, 99);
  for (std::size_t k = 1; k <= 3; ++k) {
    const Circuit c = synth_be(st, choose_params(16, 9, k));
    EXPECT_NEAR(assert_prepares(c, st), 1.0, 1e-9);
  }
}

TEST(Be, BatchInvariantAndFlagCondition) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 15; ++rep) {
    const std::size_t n = 4 + rng() % 6;
    const std::size_t s = 1 + rng() % 12;
    const SparseState st = random_sparse_state(n, s, rng());
    const BatchParams p = choose_params(n, s);
    const Circuit c = synth_be(st);
    std::vector<Complex> amps;
    for (const auto& t : st.terms()) amps.push_back(t.amplitude);
    const auto gammas = gamma_schedule(amps);
    const Qubit anc = static_cast<Qubit>(n);
    const Qubit flag = static_cast<Qubit>(n + 1);

    const std::size_t batches = (s + p.k - 1) / p.k;
    for (std::size_t b = 0; b < batches; ++b) {
      const SimState at = run(*c.prefix_before("batch " + std::to_string(b + 1)));
      const std::size_t loaded = b * p.k;
      EXPECT_EQ(at.support_size(), loaded + 1);
      for (std::size_t j = 0; j < loaded; ++j) {
        BasisString key(n + 2);
        key.assign(0, st.terms()[j].bits);
        EXPECT_NEAR(std::abs(at.amplitude(key) - amps[j]), 0.0, 1e-9);
      }
      BasisString reservoir(n + 2);
      reservoir.set(flag);
      EXPECT_NEAR(std::abs(at.amplitude(reservoir) - gammas[loaded]), 0.0, 1e-9);

      std::vector<BasisString> batch;
      for (std::size_t j = loaded; j < std::min(s, loaded + p.k); ++j) {
        batch.push_back(st.terms()[j].bits);
      }
      const Elimination e = plan_elimination(batch, p);
      for (std::size_t j = 0; j < batch.size(); ++j) {
        const std::string label = "load " + std::to_string(b + 1) + "." + std::to_string(j + 1);
        const SimState mid = run(*c.prefix_before(label));
        const BasisString& want = e.eliminated[j];
        for (const auto& [key, amp] : mid.amplitudes()) {
          bool t_match = key.test(anc);
          for (std::size_t i : e.plan.kept) t_match = t_match && key.test(i) == want.test(i);
          EXPECT_EQ(t_match, key.slice(0, n) == want) << label;
        }
      }
    }
    EXPECT_NEAR(assert_prepares(c, st), 1.0, 1e-9);
  }
}

TEST(Be, SameStateAsCvo) {
  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    const SparseState st = random_sparse_state(10, 1 + rng() % 16, rng());
    const SimState a = run(synth_be(st));
    const SimState b = run(synth_cvo(st));
    for (const auto& t : st.terms()) {
      BasisString ka(12), kb(11);
      ka.assign(0, t.bits);
      kb.assign(0, t.bits);
      EXPECT_NEAR(std::abs(a.amplitude(ka) - b.amplitude(kb)), 0.0, 1e-9);
    }
  }
}

TEST(Be, HighLevelSizeFollowsBatchShape) {
  for (std::size_t n : {64u, 128u, 256u}) {
    const SparseState st = random_sparse_state(n, n, n);
    const BatchParams p = choose_params(n, n);
    const GateCounts c = count_gates(synth_be(st), CountMode::high_level);
    const double shape = static_cast<double>((n + p.k - 1) / p.k) *
                         static_cast<double>(p.r + p.k * p.t);
    EXPECT_LE(static_cast<double>(c.total), 8.0 * shape);
    EXPECT_GE(static_cast<double>(c.total), 0.25 * shape);
  }
}

}  // namespace
}  // namespace sqsp

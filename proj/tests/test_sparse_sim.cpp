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

#include <algorithm>
#include <numeric>
#include <random>

#include "sqsp/errors.hpp"
#include "sqsp/sparse_sim.hpp"
#include "sqsp/synth_cvo.hpp"
#include "support/oracles.hpp"

namespace sqsp {
namespace {

BasisString bs(const char* t) { return BasisString::parse(t); }

Circuit plain(std::size_t width, std::vector<Qubit> ones = {}) {
  CircuitLayout layout;
  layout.width = width;
  layout.registers = {{"M", 0, static_cast<Qubit>(width - 1)}};
  layout.initial_ones = std::move(ones);
  return Circuit(layout);
}

TEST(SparseSim, ApplyExamples) {
  const SimState zero = SimState::basis(2, {});
  const SimState a = apply(zero, CnotGate{0, 1});
  EXPECT_EQ(a.support_size(), 1u);
  EXPECT_EQ(a.amplitude(bs("00")), Complex(1.0));

  const SimState b = apply(SimState::basis(2, {0}), CnotGate{0, 1});
  EXPECT_EQ(b.amplitude(bs("11")), Complex(1.0));

  const SimState c = apply(SimState::basis(1, {0}), SplGate{0.6, 1.0, 0});
  EXPECT_NEAR(std::abs(c.amplitude(bs("0")) - 0.6), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.amplitude(bs("1")) - 0.8), 0.0, 1e-15);

  EXPECT_THROW(apply(zero, XGate{2}), InputError);
}

TEST(SparseSim, PrunesExactZeros) {
  // S(1, 1) is X, so |1> maps to |0> with no residue on |1>.
  const SimState s = apply(SimState::basis(1, {0}), SplGate{1.0, 1.0, 0});
  EXPECT_EQ(s.support_size(), 1u);
  EXPECT_EQ(s.amplitude(bs("0")), Complex(1.0));
}

TEST(SparseSim, EmptyCircuitAndInitialLayout) {
  const Circuit c = plain(3, {2});
  const SimState out = run(c);
  EXPECT_EQ(out.support_size(), 1u);
  EXPECT_EQ(out.amplitude(bs("001")), Complex(1.0));
}

TEST(SparseSim, CvoBellLikeByHand) {
  const double h = std::sqrt(0.5);
  const SparseState target(2, {{bs("01"), h}, {bs("10"), h}});
  const Circuit c = synth_cvo(target);
  const SimState out = run(c);
  EXPECT_EQ(out.support_size(), 2u);
  EXPECT_NEAR(std::abs(out.amplitude(bs("010")) - h), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out.amplitude(bs("100")) - h), 0.0, 1e-12);
  EXPECT_NEAR(assert_prepares(c, target), 1.0, 1e-12);
}

// Random circuit over every gate kind, with split gates kept valid.
Circuit random_circuit(std::size_t width, std::size_t gates, std::mt19937_64& rng) {
  Circuit c = plain(width, {static_cast<Qubit>(rng() % width)});
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t i = 0; i < gates; ++i) {
    std::vector<Qubit> qs(width);
    std::iota(qs.begin(), qs.end(), 0);
    std::shuffle(qs.begin(), qs.end(), rng);
    const std::size_t t = rng() % std::min<std::size_t>(width, 5);
    std::vector<Qubit> controls(qs.begin(), qs.begin() + static_cast<long>(t));
    if (rng() % 3 == 0) {
      const double beta = 0.2 + std::abs(u(rng));
      Complex alpha(u(rng), u(rng));
      alpha *= beta * std::abs(u(rng)) / std::abs(alpha);
      c.add(controlled_spl(controls, alpha, beta, qs[t]));
    } else {
      c.add(controlled_x(controls, qs[t]));
    }
  }
  return c;
}

TEST(SparseSim, AgreesWithDenseReference) {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t width = 1 + rng() % 10;
    const Circuit c = random_circuit(width, 40, rng);
    const SimState sparse = run(c);
    const oracle::Vec dense = oracle::run(c);
    EXPECT_LE(oracle::deviation(dense, sparse), 1e-12) << "rep " << rep;
    EXPECT_NEAR(sparse.norm_squared(), 1.0, 1e-12);
  }
}

TEST(SparseSim, PermutationsKeepMagnitudes) {
  std::mt19937_64 rng(5);
  Circuit prep = plain(6);
  prep.add(SplGate{Complex(0.3, 0.4), 1.0, 0});
  prep.add(CsplGate{{0}, 0.6, 1.0, 3});
  const SimState start = run(prep);
  std::vector<double> before;
  for (const auto& [k, a] : start.amplitudes()) before.push_back(std::abs(a));
  std::sort(before.begin(), before.end());

  SimState s = start;
  for (int i = 0; i < 200; ++i) {
    std::vector<Qubit> qs(6);
    std::iota(qs.begin(), qs.end(), 0);
    std::shuffle(qs.begin(), qs.end(), rng);
    const std::size_t t = rng() % 5;
    s = sqsp::apply(s, controlled_x({qs.begin(), qs.begin() + static_cast<long>(t)}, qs[t]));
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  }
  std::vector<double> after;
  for (const auto& [k, a] : s.amplitudes()) after.push_back(std::abs(a));
  std::sort(after.begin(), after.end());
  EXPECT_EQ(before, after);
}

TEST(SparseSim, DeterministicOutput) {
  std::mt19937_64 rng(9);
  const Circuit c = random_circuit(8, 60, rng);
  EXPECT_EQ(run(c).sorted(), run(c).sorted());
}

TEST(Verify, DetectsWrongAmplitudes) {
  const double h = std::sqrt(0.5);
  const SparseState target(2, {{bs("01"), h}, {bs("10"), h}});
  Circuit c = synth_cvo(target);
  EXPECT_TRUE(verify_preparation(c, target).exact);

  const SparseState other(2, {{bs("01"), h}, {bs("11"), h}});
  const VerificationReport bad = verify_preparation(c, other);
  EXPECT_FALSE(bad.exact);
  EXPECT_LT(bad.fidelity, 0.9);
  EXPECT_FALSE(bad.offending.empty());
  EXPECT_THROW(assert_prepares(c, other), VerificationError);
}

TEST(Verify, DetectsDirtyAncilla) {
  const SparseState target(2, {{bs("11"), 1.0}});
  Circuit c = synth_cvo(target);
  c.add(XGate{2});
  const VerificationReport r = verify_preparation(c, target);
  EXPECT_FALSE(r.ancillas_clean);
  EXPECT_FALSE(r.exact);
  EXPECT_NEAR(r.ancilla_leakage, 1.0, 1e-12);
}

TEST(Verify, SignErrorIsNotForgiven) {
  const double h = std::sqrt(0.5);
  const SparseState target(2, {{bs("01"), h}, {bs("10"), h}});
  const SparseState flipped(2, {{bs("01"), h}, {bs("10"), -h}});
  EXPECT_FALSE(verify_preparation(synth_cvo(target), flipped).exact);
}

TEST(Verify, RegisterMismatch) {
  const SparseState target(3, {{bs("011"), 1.0}});
  const Circuit c = plain(2);
  EXPECT_THROW(verify_preparation(c, target), InputError);
}

}  // namespace
}  // namespace sqsp

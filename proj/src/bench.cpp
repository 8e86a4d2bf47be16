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

#include "sqsp/bench.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>
#include <random>
#include <string>
#include <unordered_set>

#include "sqsp/errors.hpp"
#include "sqsp/hampath.hpp"
#include "sqsp/sparse_sim.hpp"
#include "sqsp/synth_be.hpp"
#include "sqsp/synth_cvo.hpp"
#include "sqsp/synth_lt.hpp"
#include "text_io.hpp"

namespace sqsp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t n, std::size_t i) {
  return splitmix64(splitmix64(base) ^ splitmix64(n) ^ (i + 1));
}

void synthesize(Algorithm a, const SparseState& state, GateSink& sink) {
  switch (a) {
    case Algorithm::cvo:
      synth_cvo(state, sink);
      return;
    case Algorithm::be:
      synth_be(state, sink);
      return;
    case Algorithm::lt: {
      const auto support = state.support();
      const PathResult path = greedy_path(support);
      synth_lt(state, path.order, sink);
      return;
    }
  }
}

struct Measured {
  GateCounts counts;
  std::uint64_t high_level_total = 0;
  bool verified = false;
};

template <typename Synth>
Measured measure(const Synth& synth, CountMode mode, const SparseState* verify_against) {
  Measured m;
  if (verify_against) {
    CircuitRecorder recorder;
    synth(recorder);
    const Circuit circuit = recorder.take();
    assert_prepares(circuit, *verify_against);
    m.counts = count_gates(circuit, mode);
    m.verified = true;
  } else {
    CountingSink sink(mode);
    synth(sink);
    m.counts = sink.counts();
  }
  m.high_level_total = m.counts.high_level_total();
  return m;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   since)
      .count();
}

// Runs body(i) for i in [0, jobs), in parallel when asked; rethrows the
// first failure in job order.
template <typename Body>
void run_jobs(std::size_t jobs, bool parallel, const Body& body) {
  std::vector<std::exception_ptr> errors(jobs);
  const auto count = static_cast<std::int64_t>(jobs);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

BenchRow mean_row(const std::vector<const BenchRow*>& rows) {
  BenchRow out = *rows.front();
  out.seed.reset();
  out.mean = true;
  const double m = static_cast<double>(rows.size());
  double total = 0, cnot = 0, single = 0, high = 0, norm = 0, ms = 0;
  bool verified = true;
  for (const BenchRow* r : rows) {
    total += static_cast<double>(r->counts.total);
    cnot += static_cast<double>(r->counts.cnot);
    single += static_cast<double>(r->counts.single_qubit);
    high += static_cast<double>(r->high_level_total);
    norm += r->normalized;
    ms += r->wall_ms;
    verified = verified && r->verified;
  }
  out.counts = GateCounts{};
  out.counts.total = static_cast<std::uint64_t>(std::llround(total / m));
  out.counts.cnot = static_cast<std::uint64_t>(std::llround(cnot / m));
  out.counts.single_qubit = static_cast<std::uint64_t>(std::llround(single / m));
  out.high_level_total = static_cast<std::uint64_t>(std::llround(high / m));
  out.normalized = norm / m;
  out.wall_ms = ms / m;
  out.verified = verified;
  return out;
}

}  // namespace

SparseState random_sparse_state(std::size_t n, std::size_t s, std::uint64_t seed) {
  if (n == 0) throw InputError("random state needs n >= 1");
  if (s == 0) throw InputError("random state needs s >= 1");
  if (n < 64 && s > (std::uint64_t{1} << n)) {
    throw InputError("cannot draw " + std::to_string(s) + " distinct strings of length " +
                     std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::unordered_set<BasisString, BasisStringHash> seen;
  std::vector<Term> terms;
  terms.reserve(s);
  while (terms.size() < s) {
    BasisString bits(n);
    for (std::size_t lo = 0; lo < n; lo += 64) {
      const std::uint64_t word = rng();
      for (std::size_t b = 0; b < 64 && lo + b < n; ++b) {
        if (word >> b & 1) bits.set(lo + b);
      }
    }
    if (seen.insert(bits).second) terms.push_back({std::move(bits), {}});
  }
  std::normal_distribution<double> gauss;
  double norm2 = 0.0;
  for (auto& t : terms) {
    do {
      t.amplitude = {gauss(rng), gauss(rng)};
    } while (std::abs(t.amplitude) < 1e-6);
    norm2 += std::norm(t.amplitude);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& t : terms) t.amplitude *= scale;
  return SparseState(n, std::move(terms));
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::cvo:
      return "cvo";
    case Algorithm::be:
      return "be";
    case Algorithm::lt:
      return "lt";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::cvo, Algorithm::be, Algorithm::lt}) {
    if (text == algorithm_name(a)) return a;
  }
  return std::nullopt;
}

std::vector<BenchRow> bench_sparse(const SparseBenchOptions& options) {
  const std::size_t per_n = options.instances * options.algorithms.size();
  std::vector<BenchRow> rows(options.n_values.size() * per_n);
  const std::size_t jobs = options.n_values.size() * options.instances;

  run_jobs(jobs, options.parallel, [&](std::size_t job) {
    const std::size_t ni = job / options.instances;
    const std::size_t inst = job % options.instances;
    const std::size_t n = options.n_values[ni];
    const std::size_t s = options.s.value_or(n);
    const std::uint64_t seed = instance_seed(options.seed, n, inst);
    const SparseState state = random_sparse_state(n, s, seed);
    const bool verify = n <= kVerifyMaxQubits && s <= kVerifyMaxTerms;
    for (std::size_t a = 0; a < options.algorithms.size(); ++a) {
      const Algorithm algo = options.algorithms[a];
      const auto start = std::chrono::steady_clock::now();
      const Measured m = measure(
          [&](GateSink& sink) { synthesize(algo, state, sink); }, options.mode,
          verify ? &state : nullptr);
      BenchRow& row = rows[ni * per_n + inst * options.algorithms.size() + a];
      row.n = n;
      row.s = s;
      row.algorithm = std::string(algorithm_name(algo));
      row.mode = options.mode;
      row.counts = m.counts;
      row.high_level_total = m.high_level_total;
      row.normalized =
          static_cast<double>(m.counts.cnot) / (static_cast<double>(n) * static_cast<double>(s));
      row.seed = seed;
      row.verified = m.verified;
      row.wall_ms = options.timing ? elapsed_ms(start) : 0.0;
    }
  });

  std::vector<BenchRow> out;
  out.reserve(rows.size() + options.n_values.size() * options.algorithms.size());
  for (std::size_t ni = 0; ni < options.n_values.size(); ++ni) {
    for (std::size_t k = 0; k < per_n; ++k) out.push_back(rows[ni * per_n + k]);
    if (options.instances == 0) continue;
    for (std::size_t a = 0; a < options.algorithms.size(); ++a) {
      std::vector<const BenchRow*> group;
      for (std::size_t inst = 0; inst < options.instances; ++inst) {
        group.push_back(&rows[ni * per_n + inst * options.algorithms.size() + a]);
      }
      out.push_back(mean_row(group));
    }
  }
  return out;
}

std::vector<BenchRow> bench_u1(const U1BenchOptions& options) {
  for (std::size_t n : options.n_values) {
    const std::size_t k = options.k.value_or(n / 2);
    if (k > n) throw InputError("weight " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    const std::uint64_t c = binomial(n, k);
    if (c > options.budget) {
      throw BudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                           std::to_string(c) + " exceeds the budget of " +
                           std::to_string(options.budget) + " strings");
    }
  }

  std::vector<BenchRow> rows(options.n_values.size() * 2);
  run_jobs(options.n_values.size(), options.parallel, [&](std::size_t ni) {
    const std::size_t n = options.n_values[ni];
    const std::size_t k = options.k.value_or(n / 2);
    const std::uint64_t c = binomial(n, k);
    const double cd = static_cast<double>(c);
    const Complex amp{std::sqrt(1.0 / cd), 0.0};
    const double model = cd * static_cast<double>(k);

    auto synth = [&](GateSink& sink) {
      ConstantWeightPath gen(n, k);
      std::uint64_t j = 0;
      synth_lt_stream(
          n,
          [&](PathTerm& out) {
            if (!gen.next(out.bits)) return false;
            out.amplitude = amp;
            out.gamma = std::sqrt(static_cast<double>(c - j) / cd);
            ++j;
            return true;
          },
          sink);
    };

    std::optional<SparseState> target;
    if (n <= kVerifyMaxQubits && c <= kVerifyMaxTerms) {
      std::vector<Term> terms;
      for (auto& bits : constant_weight_path(n, k).order) terms.push_back({bits, amp});
      target.emplace(n, std::move(terms));
    }
    const auto start = std::chrono::steady_clock::now();
    const Measured m = measure(synth, options.mode, target ? &*target : nullptr);

    BenchRow& row = rows[2 * ni];
    row.n = n;
    row.s = c;
    row.algorithm = std::string(algorithm_name(Algorithm::lt));
    row.mode = options.mode;
    row.counts = m.counts;
    row.high_level_total = m.high_level_total;
    row.normalized = static_cast<double>(m.counts.cnot) / std::max(1.0, model);
    row.verified = m.verified;
    row.wall_ms = options.timing ? elapsed_ms(start) : 0.0;

    BenchRow& ref = rows[2 * ni + 1];
    const auto model_count = static_cast<std::uint64_t>(c * k);
    ref.n = n;
    ref.s = c;
    ref.algorithm = std::string(kU1ModelName);
    ref.mode = options.mode;
    ref.counts.total = model_count;
    ref.counts.cnot = model_count;
    ref.high_level_total = model_count;
    ref.normalized = model / std::max(1.0, model);
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,s,algorithm,mode,gates_total,cnot,single_qubit,normalized,seed,wall_ms\n";
  char ms[32];
  for (const BenchRow& r : rows) {
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    std::string seed;
    if (r.mean) {
      seed = "mean";
    } else if (r.seed) {
      seed = std::to_string(*r.seed);
    } else if (r.algorithm == kU1ModelName) {
      seed = "model";
    } else {
      seed = "-";
    }
    out << r.n << ',' << r.s << ',' << r.algorithm << ',' << mode_name(r.mode) << ','
        << r.counts.total << ',' << r.counts.cnot << ',' << r.counts.single_qubit << ','
        << detail::format_real(r.normalized) << ',' << seed << ',' << ms << '\n';
  }
}

}  // namespace sqsp

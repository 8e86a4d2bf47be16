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

#include "sqsp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sqsp/bench.hpp"
#include "sqsp/circuit.hpp"
#include "sqsp/cost.hpp"
#include "sqsp/errors.hpp"
#include "sqsp/hampath.hpp"
#include "sqsp/sparse_sim.hpp"
#include "sqsp/sparse_state.hpp"
#include "sqsp/synth_be.hpp"
#include "sqsp/synth_cvo.hpp"
#include "sqsp/synth_lt.hpp"

namespace sqsp {

namespace {

const std::map<std::string, CountMode> kModes{{"high", CountMode::high_level},
                                              {"elementary", CountMode::elementary}};
const std::map<std::string, Algorithm> kAlgorithms{
    {"cvo", Algorithm::cvo}, {"be", Algorithm::be}, {"lt", Algorithm::lt}};

enum class PathStrategy { greedy, optimal, file, constant_weight };
const std::map<std::string, PathStrategy> kStrategies{
    {"greedy", PathStrategy::greedy},
    {"optimal", PathStrategy::optimal},
    {"file", PathStrategy::file},
    {"constant-weight", PathStrategy::constant_weight}};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, const Writer& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  write(file);
  if (!file) throw InputError("write to " + path + " failed");
}

std::vector<BasisString> constant_weight_order(const SparseState& state) {
  const std::size_t n = state.num_qubits();
  const std::size_t k = state.terms().front().bits.weight();
  if (binomial(n, k) != state.sparsity()) {
    throw InputError("support is not the full set of weight-" + std::to_string(k) +
                     " strings");
  }
  return constant_weight_path(n, k).order;
}

void print_counts(std::ostream& out, const Circuit& circuit, CountMode mode) {
  const GateCounts high = count_gates(circuit, CountMode::high_level);
  out << "qubits " << circuit.width() << '\n';
  out << "high_level total " << high.total;
  for (std::size_t i = 0; i < kGateKindCount; ++i) {
    out << ' ' << kind_name(static_cast<GateKind>(i)) << ' ' << high.by_kind[i];
  }
  out << '\n';
  if (mode == CountMode::elementary) {
    const GateCounts el = count_gates(circuit, mode);
    out << "elementary total " << el.total << " cnot " << el.cnot << " single_qubit "
        << el.single_qubit << '\n';
  }
}

struct SynthArgs {
  std::string state_file;
  Algorithm algorithm = Algorithm::cvo;
  std::optional<std::size_t> k;
  PathStrategy path = PathStrategy::greedy;
  std::string path_file;
  std::string output;
  CountMode mode = CountMode::elementary;
};

int cmd_synth(const SynthArgs& a, std::ostream& out, std::ostream& err) {
  const SparseState state = read_state_file(a.state_file);
  Circuit circuit;
  std::optional<std::uint64_t> length;
  switch (a.algorithm) {
    case Algorithm::cvo:
      circuit = synth_cvo(state);
      break;
    case Algorithm::be: {
      std::optional<BatchParams> params;
      if (a.k) params = choose_params(state.num_qubits(), state.sparsity(), a.k);
      circuit = synth_be(state, params);
      break;
    }
    case Algorithm::lt: {
      std::vector<BasisString> order;
      const auto support = state.support();
      switch (a.path) {
        case PathStrategy::greedy:
          order = greedy_path(support).order;
          break;
        case PathStrategy::optimal:
          order = optimal_path(support).order;
          break;
        case PathStrategy::file: {
          if (a.path_file.empty()) throw InputError("--path file needs --path-file");
          std::ifstream in = open_in(a.path_file);
          order = read_path(in);
          break;
        }
        case PathStrategy::constant_weight:
          order = constant_weight_order(state);
          break;
      }
      circuit = synth_lt(state, order);
      length = path_length(order);
      break;
    }
  }
  std::ostream& summary = a.output.empty() ? err : out;
  emit(a.output, out, [&](std::ostream& o) { write_circuit(o, circuit); });
  summary << "algorithm " << algorithm_name(a.algorithm) << '\n';
  if (length) summary << "path_length " << *length << '\n';
  print_counts(summary, circuit, a.mode);
  return kExitOk;
}

int cmd_verify(const std::string& circuit_file, const std::string& state_file,
               std::size_t max_qubits, std::ostream& out) {
  std::ifstream in = open_in(circuit_file);
  const Circuit circuit = read_circuit(in);
  const SparseState state = read_state_file(state_file);
  if (circuit.width() > max_qubits) {
    throw BudgetExceeded("circuit has " + std::to_string(circuit.width()) +
                         " qubits, simulation limit is " + std::to_string(max_qubits));
  }
  const VerificationReport report = verify_preparation(circuit, state);
  out << report.summary();
  return report.exact ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::vector<BasisString> read_path(std::istream& in) {
  std::vector<BasisString> order;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    const auto bad = token.find_first_not_of("01");
    if (bad != std::string::npos) {
      throw ParseError(lineno, first + bad + 1, "expected a bitstring");
    }
    order.push_back(BasisString::parse(token));
  }
  return order;
}

void write_path(std::ostream& out, const std::vector<BasisString>& order) {
  for (const auto& s : order) out << s.to_string() << '\n';
  out << "# length " << path_length(order) << '\n';
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse quantum state preparation circuits"};
  app.name("sqsp");
  app.require_subcommand(1);

  SynthArgs synth;
  auto* sc = app.add_subcommand("synth", "Synthesize a circuit for a state file");
  sc->add_option("state", synth.state_file, "State file")->required();
  sc->add_option("-a,--algo", synth.algorithm, "cvo, be or lt")
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case))
      ->default_str("cvo");
  sc->add_option("-k,--k", synth.k, "Batch size for be");
  sc->add_option("--path", synth.path, "Path for lt: greedy, optimal, file, constant-weight")
      ->transform(CLI::CheckedTransformer(kStrategies, CLI::ignore_case))
      ->default_str("greedy");
  sc->add_option("--path-file", synth.path_file, "Bitstring order for --path file");
  sc->add_option("-o,--output", synth.output, "Circuit file (stdout if omitted)");
  sc->add_option("--cost-model", synth.mode, "high or elementary")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->default_str("elementary");

  std::string circuit_file, verify_state;
  std::size_t max_sim_qubits = 4096;
  auto* vc = app.add_subcommand("verify", "Simulate a circuit against a state file");
  vc->add_option("circuit", circuit_file, "Circuit file")->required();
  vc->add_option("state", verify_state, "State file")->required();
  vc->add_option("--max-sim-qubits", max_sim_qubits, "Largest circuit width to simulate")
      ->capture_default_str();

  std::string path_state, strategy = "greedy";
  std::optional<std::size_t> cw_n, cw_k;
  auto* pc = app.add_subcommand("path", "Print a Hamiltonian path over a support");
  pc->add_option("state", path_state, "State file");
  pc->add_option("--strategy", strategy, "greedy or optimal")
      ->check(CLI::IsMember({"greedy", "optimal"}))
      ->capture_default_str();
  pc->add_option("--n", cw_n, "Constant-weight path length");
  pc->add_option("--k", cw_k, "Constant-weight path weight");

  SparseBenchOptions sparse;
  std::vector<std::string> sparse_algos{"cvo", "be"};
  std::string sparse_out;
  bool sparse_serial = false, sparse_no_time = false;
  auto* bs = app.add_subcommand("bench-sparse", "Random sparse state gate counts as CSV");
  bs->add_option("--n", sparse.n_values, "Qubit counts")
      ->delimiter(',')
      ->default_str("256,512,1024,2048,4096");
  bs->add_option("--s", sparse.s, "Sparsity (default s = n)");
  bs->add_option("--algos", sparse_algos, "Algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember({"cvo", "be", "lt"}))
      ->default_str("cvo,be");
  bs->add_option("--instances", sparse.instances, "Random states per n")->capture_default_str();
  bs->add_option("--seed", sparse.seed, "Base seed")->capture_default_str();
  bs->add_option("--cost-model", sparse.mode, "high or elementary")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->default_str("elementary");
  bs->add_flag("--serial", sparse_serial, "Disable OpenMP");
  bs->add_flag("--no-timing", sparse_no_time, "Write 0 in wall_ms");
  bs->add_option("-o,--output", sparse_out, "CSV file (stdout if omitted)");

  U1BenchOptions u1;
  std::string u1_out;
  bool u1_serial = false, u1_no_time = false;
  auto* bu = app.add_subcommand("bench-u1", "Weight-k superposition gate counts as CSV");
  bu->add_option("--n", u1.n_values, "Qubit counts")->delimiter(',')->default_str("12,16,20");
  bu->add_option("--k", u1.k, "Weight (default floor(n/2))");
  bu->add_option("--budget", u1.budget, "Largest C(n,k) to synthesize")->capture_default_str();
  bu->add_option("--cost-model", u1.mode, "high or elementary")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->default_str("elementary");
  bu->add_flag("--serial", u1_serial, "Disable OpenMP");
  bu->add_flag("--no-timing", u1_no_time, "Write 0 in wall_ms");
  bu->add_option("-o,--output", u1_out, "CSV file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*sc) return cmd_synth(synth, out, err);
    if (*vc) return cmd_verify(circuit_file, verify_state, max_sim_qubits, out);
    if (*pc) {
      std::vector<BasisString> order;
      if (cw_n || cw_k) {
        if (!cw_n || !cw_k || !path_state.empty()) {
          throw InputError("path takes either a state file or both --n and --k");
        }
        order = constant_weight_path(*cw_n, *cw_k).order;
      } else {
        if (path_state.empty()) throw InputError("path needs a state file or --n/--k");
        const auto support = read_state_file(path_state).support();
        order = strategy == "optimal" ? optimal_path(support).order
                                      : greedy_path(support).order;
      }
      write_path(out, order);
      return kExitOk;
    }
    if (*bs) {
      if (sparse.n_values.empty()) sparse.n_values = {256, 512, 1024, 2048, 4096};
      sparse.algorithms.clear();
      for (const auto& name : sparse_algos) sparse.algorithms.push_back(*parse_algorithm(name));
      sparse.parallel = !sparse_serial;
      sparse.timing = !sparse_no_time;
      const auto rows = bench_sparse(sparse);
      emit(sparse_out, out, [&](std::ostream& o) { write_csv(o, rows); });
      return kExitOk;
    }
    if (*bu) {
      if (u1.n_values.empty()) u1.n_values = {12, 16, 20};
      u1.parallel = !u1_serial;
      u1.timing = !u1_no_time;
      const auto rows = bench_u1(u1);
      emit(u1_out, out, [&](std::ostream& o) { write_csv(o, rows); });
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sqsp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sqsp

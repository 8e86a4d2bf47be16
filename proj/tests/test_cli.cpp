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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqsp/bench.hpp"
#include "sqsp/circuit.hpp"
#include "sqsp/cli.hpp"
#include "sqsp/errors.hpp"
#include "sqsp/sparse_state.hpp"

namespace sqsp {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sqsp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string write_state(const std::string& name, const SparseState& st) const {
    std::ofstream out(path(name));
    sqsp::write_state(out, st);
    return path(name);
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char* kBell =
    "n 2 s 2\n"
    "01 0.70710678118654757 0\n"
    "10 0.70710678118654757 0\n";

TEST_F(CliTest, SynthThenVerify) {
  const std::string state = write("bell.txt", kBell);
  const std::string circ = path("bell.circ");
  ASSERT_EQ(run({"synth", state, "--algo", "cvo", "-o", circ}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("high_level total"), std::string::npos);
  EXPECT_NE(out_.str().find("elementary total"), std::string::npos);
  ASSERT_EQ(run({"verify", circ, state}), kExitOk) << out_.str();
  EXPECT_NE(out_.str().find("PASS"), std::string::npos);
  EXPECT_NE(out_.str().find("fidelity 1"), std::string::npos);
}

TEST_F(CliTest, SynthToStdoutKeepsCircuitClean) {
  const std::string state = write("bell.txt", kBell);
  ASSERT_EQ(run({"synth", state, "--algo", "lt"}), kExitOk);
  std::istringstream in(out_.str());
  EXPECT_NO_THROW(read_circuit(in));
  EXPECT_NE(err_.str().find("path_length"), std::string::npos);
}

TEST_F(CliTest, BeRoundTripAndDeterministicBytes) {
  const std::string state = write_state("s.txt", random_sparse_state(32, 12, 7));
  const std::string a = path("a.circ"), b = path("b.circ");
  ASSERT_EQ(run({"synth", state, "--algo", "be", "-o", a}), kExitOk) << err_.str();
  ASSERT_EQ(run({"synth", state, "--algo", "be", "-o", b}), kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(run({"verify", a, state}), kExitOk) << out_.str();
  ASSERT_EQ(run({"synth", state, "--algo", "be", "--k", "3", "-o", a}), kExitOk);
  EXPECT_EQ(run({"verify", a, state}), kExitOk);
  EXPECT_EQ(run({"synth", state, "--algo", "be", "--k", "5"}), kExitInputError);
}

TEST_F(CliTest, LtPathStrategies) {
  const std::string state = write_state("s.txt", random_sparse_state(6, 9, 3));
  const std::string circ = path("c.circ");
  for (const char* strategy : {"greedy", "optimal"}) {
    ASSERT_EQ(run({"synth", state, "--algo", "lt", "--path", strategy, "-o", circ}), kExitOk);
    EXPECT_EQ(run({"verify", circ, state}), kExitOk);
  }
  ASSERT_EQ(run({"path", state}), kExitOk);
  const std::string order = write("order.txt", out_.str());
  ASSERT_EQ(run({"synth", state, "--algo", "lt", "--path", "file", "--path-file", order,
                 "-o", circ}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(run({"verify", circ, state}), kExitOk);

  const std::string dicke =
      write("dicke.txt",
            "n 4 s 6\n"
            "0011 0.40824829046386302 0\n0101 0.40824829046386302 0\n"
            "0110 0.40824829046386302 0\n1001 0.40824829046386302 0\n"
            "1010 0.40824829046386302 0\n1100 0.40824829046386302 0\n");
  ASSERT_EQ(run({"synth", dicke, "--algo", "lt", "--path", "constant-weight", "-o", circ}),
            kExitOk)
      << err_.str();
  EXPECT_NE(out_.str().find("path_length 10"), std::string::npos);
  EXPECT_EQ(run({"verify", circ, dicke}), kExitOk);
  EXPECT_EQ(run({"synth", state, "--algo", "lt", "--path", "constant-weight"}), kExitInputError);
}

TEST_F(CliTest, OptimalPathOverBudget) {
  const std::string state = write_state("s.txt", random_sparse_state(10, 20, 1));
  EXPECT_EQ(run({"synth", state, "--algo", "lt", "--path", "optimal"}), kExitBudget);
  EXPECT_NE(err_.str().find("limited to 15"), std::string::npos);
}

TEST_F(CliTest, VerifyFailures) {
  const std::string state = write("bell.txt", kBell);
  const std::string other = write("other.txt",
                                  "n 2 s 2\n"
                                  "00 0.70710678118654757 0\n"
                                  "11 0.70710678118654757 0\n");
  const std::string circ = path("bell.circ");
  ASSERT_EQ(run({"synth", state, "-o", circ}), kExitOk);
  EXPECT_EQ(run({"verify", circ, other}), kExitVerifyFailed);
  EXPECT_NE(out_.str().find("FAIL"), std::string::npos);
  EXPECT_NE(out_.str().find("offending"), std::string::npos);
}

TEST_F(CliTest, PerturbedSplitParameter) {
  const std::string state = write("s.txt",
                                  "n 2 s 2\n"
                                  "01 0.59999999999999998 0\n"
                                  "10 0.80000000000000004 0\n");
  const std::string circ = path("c.circ");
  ASSERT_EQ(run({"synth", state, "-o", circ}), kExitOk);
  Circuit c = read_circuit_file(circ);
  std::ostringstream edited;
  {
    std::istringstream in(slurp(circ));
    std::string line;
    bool done = false;
    while (std::getline(in, line)) {
      if (!done && line.rfind("CSPL 1 ", 0) == 0) {
        std::istringstream f(line);
        std::string op, k, ctl, re, im, beta, t;
        f >> op >> k >> ctl >> re >> im >> beta >> t;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", std::stod(re) + 1e-3);
        line = op + " " + k + " " + ctl + " " + buf + " " + im + " " + beta + " " + t;
        done = true;
      }
      edited << line << '\n';
    }
    ASSERT_TRUE(done);
  }
  const std::string bad = write("bad.circ", edited.str());
  ASSERT_EQ(run({"verify", bad, state}), kExitVerifyFailed);
  const std::string text = out_.str();
  const auto pos = text.find("max_deviation ");
  ASSERT_NE(pos, std::string::npos);
  const double dev = std::stod(text.substr(pos + 14));
  EXPECT_GT(dev, 3e-4);
  EXPECT_LT(dev, 3e-3);
}

TEST_F(CliTest, InputErrors) {
  const std::string bad = write("bad.txt", "n 2 s 1\n0z 1 0\n");
  EXPECT_EQ(run({"synth", bad}), kExitInputError);
  EXPECT_NE(err_.str().find("line 2, column 1"), std::string::npos);
  EXPECT_EQ(run({"synth", path("missing.txt")}), kExitInputError);
  EXPECT_EQ(run({"synth", write("ok.txt", kBell), "--algo", "qft"}), kExitInputError);
  EXPECT_EQ(run({}), kExitInputError);
  EXPECT_EQ(run({"--help"}), kExitOk);
  const std::string state = write("bell.txt", kBell);
  const std::string circ = path("c.circ");
  ASSERT_EQ(run({"synth", state, "-o", circ}), kExitOk);
  EXPECT_EQ(run({"verify", circ, state, "--max-sim-qubits", "2"}), kExitBudget);
  const std::string wide = write_state("wide.txt", random_sparse_state(3, 2, 1));
  EXPECT_EQ(run({"verify", circ, wide}), kExitInputError);
}

TEST_F(CliTest, PathSubcommand) {
  ASSERT_EQ(run({"path", "--n", "4", "--k", "2"}), kExitOk);
  std::istringstream in(out_.str());
  const auto order = read_path(in);
  EXPECT_EQ(order.size(), 6u);
  EXPECT_NE(out_.str().find("# length 10"), std::string::npos);
  EXPECT_EQ(run({"path", "--n", "4"}), kExitInputError);
}

TEST_F(CliTest, Benchmarks) {
  const std::string csv = path("u1.csv");
  ASSERT_EQ(run({"bench-u1", "--n", "6,8", "-o", csv}), kExitOk) << err_.str();
  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("n,s,algorithm,mode,gates_total,cnot,single_qubit,normalized,seed,wall_ms\n", 0),
            0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
  EXPECT_EQ(run({"bench-u1", "--n", "40", "--budget", "1000"}), kExitBudget);

  ASSERT_EQ(run({"bench-sparse", "--n", "8,16", "--s", "4", "--instances", "2", "--algos",
                 "cvo,be,lt", "--no-timing", "--seed", "9"}),
            kExitOk)
      << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(run({"bench-sparse", "--n", "8,16", "--s", "4", "--instances", "2", "--algos",
                 "cvo,be,lt", "--no-timing", "--seed", "9", "--serial"}),
            kExitOk);
  EXPECT_EQ(first, out_.str());
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 1 + 2 * 3 * 3);
}

}  // namespace
}  // namespace sqsp

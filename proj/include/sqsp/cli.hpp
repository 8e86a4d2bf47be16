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

#include <iosfwd>
#include <string>
#include <vector>

#include "sqsp/basis_string.hpp"

namespace sqsp {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
  kExitBudget = 3,
};

/// Entry point of the `sqsp` tool. Subcommands: synth, verify, path,
/// bench-sparse, bench-u1. Returns the process exit code; diagnostics go to
/// `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Path file: one bitstring per line; blank lines and '#' comments ignored.
/// Throws ParseError on anything else.
std::vector<BasisString> read_path(std::istream& in);
void write_path(std::ostream& out, const std::vector<BasisString>& order);

}  // namespace sqsp

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

// Line tokenizer shared by the state and circuit readers.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "sqsp/errors.hpp"

namespace sqsp::detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string text;
  std::vector<Token> tokens;

  [[noreturn]] void fail(std::size_t token_index, const std::string& what) const {
    const std::size_t col =
        token_index < tokens.size() ? tokens[token_index].column : text.size() + 1;
    throw ParseError(number, col, what);
  }

  void expect_count(std::size_t n, std::string_view what) const {
    if (tokens.size() != n) {
      fail(std::min(n, tokens.size()),
           "expected " + std::to_string(n) + " fields for " + std::string(what) +
               ", got " + std::to_string(tokens.size()));
    }
  }

  std::size_t index(std::size_t i) const {
    if (i >= tokens.size()) fail(i, "missing integer field");
    std::size_t value = 0;
    const auto t = tokens[i].text;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      fail(i, "expected a non-negative integer, got '" + std::string(t) + "'");
    }
    return value;
  }

  double real(std::size_t i) const {
    if (i >= tokens.size()) fail(i, "missing numeric field");
    const std::string t(tokens[i].text);
    char* end = nullptr;
    const double value = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size()) {
      fail(i, "expected a number, got '" + t + "'");
    }
    return value;
  }
};

/// Reads the next non-blank, non-comment line. Returns false at end of input.
/// Reads the next non-blank, non-comment line. Comment bodies (text after
/// '#') are passed to `on_comment` when given.
inline bool next_line(std::istream& in, std::size_t& line_no, Line& line,
                      const std::function<void(std::string_view)>& on_comment = {}) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') {
      if (on_comment) on_comment(std::string_view(raw).substr(first + 1));
      continue;
    }
    line.number = line_no;
    line.text = std::move(raw);
    line.tokens.clear();
    std::string_view view(line.text);
    std::size_t pos = 0;
    while (pos < view.size()) {
      pos = view.find_first_not_of(" \t", pos);
      if (pos == std::string_view::npos) break;
      std::size_t end = view.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = view.size();
      line.tokens.push_back({view.substr(pos, end - pos), pos + 1});
      pos = end;
    }
    return true;
  }
  return false;
}

/// Shortest round-tripping decimal form (17 significant digits).
inline std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace sqsp::detail

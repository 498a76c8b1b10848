// Copyright 2026 The qdag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDAG_SRC_TEXT_LINES_HPP
#define QDAG_SRC_TEXT_LINES_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdag/error.hpp"

namespace qdag::detail {

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string_view> tokens;
};

/// Splits into whitespace-separated tokens, dropping blank and `#` lines.
inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty() && line.tokens.front().front() != '#') {
      out.push_back(std::move(line));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] inline void fail_at(const Line& line, const std::string& msg,
                                 ErrorCode code = ErrorCode::kFormatError) {
  throw Error(code, msg, Error::PositionKind::kLine, line.number);
}

template <typename Int>
Int parse_int(const Line& line, std::string_view token, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail_at(line, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::string read_file(const std::string& path);

}  // namespace qdag::detail

#endif  // QDAG_SRC_TEXT_LINES_HPP

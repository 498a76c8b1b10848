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

#include "qdag/zhegalkin.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <utility>

#include "qdag/error.hpp"

namespace qdag {

std::uint32_t ZhegalkinPolynomial::var_count() const {
  std::uint32_t hi = 0;
  for (const Monomial& c : monomials) {
    if (!c.empty()) hi = std::max(hi, c.back());
  }
  return hi;
}

namespace {

enum class Tok { kPlus, kTimes, kZero, kOne, kVar, kEnd };

struct Token {
  Tok kind;
  std::size_t offset;
  std::uint32_t var = 0;
};

class AnfLexer {
 public:
  explicit AnfLexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const std::size_t at = pos_;
    if (pos_ == text_.size()) return {Tok::kEnd, at};
    const char c = text_[pos_];
    if (c == '+') return ++pos_, Token{Tok::kPlus, at};
    if (c == '*') return ++pos_, Token{Tok::kTimes, at};
    if (is_digit(c)) {
      const std::size_t end = digits_end(pos_);
      const std::string_view lit = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (lit == "0") return {Tok::kZero, at};
      if (lit == "1") return {Tok::kOne, at};
      throw Error(ErrorCode::kSyntaxError, "constant must be 0 or 1",
                  Error::PositionKind::kOffset, at);
    }
    if (c == 'x') {
      ++pos_;
      skip_blank();
      const std::size_t start = pos_;
      const std::size_t end = digits_end(start);
      if (end == start) {
        throw Error(ErrorCode::kSyntaxError, "expected a variable index after 'x'",
                    Error::PositionKind::kOffset, start);
      }
      std::uint64_t index = 0;
      for (std::size_t i = start; i < end; ++i) {
        index = index * 10 + static_cast<std::uint64_t>(text_[i] - '0');
        if (index > std::numeric_limits<std::uint32_t>::max()) {
          throw Error(ErrorCode::kSyntaxError, "variable index too large",
                      Error::PositionKind::kOffset, start);
        }
      }
      if (index == 0) {
        throw Error(ErrorCode::kVariableIndexZero, "variables are numbered from x1",
                    Error::PositionKind::kOffset, at);
      }
      pos_ = end;
      return {Tok::kVar, at, static_cast<std::uint32_t>(index)};
    }
    throw Error(ErrorCode::kSyntaxError, std::string("unexpected character '") + c + "'",
                Error::PositionKind::kOffset, at);
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::size_t digits_end(std::size_t from) const {
    while (from < text_.size() && is_digit(text_[from])) ++from;
    return from;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void syntax_error(const Token& t, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError, what, Error::PositionKind::kOffset, t.offset);
}

}  // namespace

ZhegalkinPolynomial parse_anf(std::string_view text) {
  AnfLexer lex(text);
  ZhegalkinPolynomial poly;
  Token tok = lex.next();
  if (tok.kind == Tok::kEnd) {
    throw Error(ErrorCode::kEmptyInput, "no polynomial in input", Error::PositionKind::kOffset,
                tok.offset);
  }

  while (true) {
    switch (tok.kind) {
      case Tok::kZero:
        tok = lex.next();
        break;
      case Tok::kOne:
        poly.constant = !poly.constant;
        tok = lex.next();
        break;
      case Tok::kVar: {
        Monomial term{tok.var};
        tok = lex.next();
        while (tok.kind == Tok::kTimes) {
          tok = lex.next();
          if (tok.kind != Tok::kVar) syntax_error(tok, "expected a variable after '*'");
          term.push_back(tok.var);
          tok = lex.next();
        }
        std::sort(term.begin(), term.end());
        term.erase(std::unique(term.begin(), term.end()), term.end());
        poly.monomials.push_back(std::move(term));
        break;
      }
      default:
        syntax_error(tok, "expected a term");
    }
    if (tok.kind == Tok::kEnd) return poly;
    if (tok.kind != Tok::kPlus) syntax_error(tok, "expected '+' or end of input");
    tok = lex.next();
  }
}

ZhegalkinPolynomial normalize(const ZhegalkinPolynomial& poly) {
  std::map<Monomial, bool> odd;
  for (const Monomial& c : poly.monomials) odd[c] = !odd[c];
  ZhegalkinPolynomial out;
  out.constant = poly.constant;
  for (auto& [c, keep] : odd) {
    if (keep) out.monomials.push_back(c);
  }
  return out;
}

std::string to_string(const ZhegalkinPolynomial& poly) {
  if (poly.monomials.empty()) return poly.constant ? "1" : "0";
  std::string out = poly.constant ? "1" : "";
  for (const Monomial& c : poly.monomials) {
    if (!out.empty()) out += " + ";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += '*';
      out += 'x' + std::to_string(c[i]);
    }
  }
  return out;
}

bool eval_truth_table(const ZhegalkinPolynomial& poly, std::span<const std::uint8_t> x) {
  if (x.size() < poly.var_count()) {
    throw Error(ErrorCode::kMissingVariable,
                "assignment covers " + std::to_string(x.size()) + " of " +
                    std::to_string(poly.var_count()) + " variables");
  }
  bool acc = poly.constant;
  for (const Monomial& c : poly.monomials) {
    bool term = true;
    for (std::uint32_t j : c) term = term && x[j - 1] != 0;
    acc = acc != term;
  }
  return acc;
}

CircuitDag compile_to_xor_circuit(const ZhegalkinPolynomial& input) {
  const ZhegalkinPolynomial poly = normalize(input);
  const std::size_t k = poly.k();
  if (k == 0) {
    throw Error(ErrorCode::kConstantPolynomial,
                "constant polynomial " + to_string(poly) + " has no circuit");
  }

  // Layout: XOR chain (root first), AND per monomial of degree >= 2, then one
  // VAR per variable in ascending order.
  std::size_t ands = 0;
  std::map<std::uint32_t, Vertex> var_vertex;
  for (const Monomial& c : poly.monomials) {
    if (c.size() >= 2) ++ands;
    for (std::uint32_t j : c) var_vertex.emplace(j, 0);
  }
  const std::size_t xors = k - 1;
  RawCircuit raw;
  raw.n = xors + ands + var_vertex.size();
  raw.gates.resize(raw.n);
  raw.output_negated = poly.constant;
  Vertex next = static_cast<Vertex>(xors + ands + 1);
  for (auto& [j, v] : var_vertex) {
    v = next++;
    raw.gates[v - 1] = {GateKind::kVar, "x" + std::to_string(j)};
  }
  auto add = [&raw](Vertex from, Vertex to) {
    raw.edges.push_back({from, to, 0});
    raw.polarity.push_back(1);
  };

  std::vector<Vertex> term_vertex;
  Vertex and_at = static_cast<Vertex>(xors + 1);
  for (const Monomial& c : poly.monomials) {
    if (c.size() == 1) {
      term_vertex.push_back(var_vertex.at(c.front()));
      continue;
    }
    raw.gates[and_at - 1] = {GateKind::kAnd, {}};
    for (std::uint32_t j : c) add(and_at, var_vertex.at(j));
    term_vertex.push_back(and_at++);
  }

  // X_1 = C_1 ⊕ C_2, X_j = X_{j-1} ⊕ C_{j+1}; X_j sits at index k - j.
  for (std::size_t j = 1; j <= xors; ++j) {
    const auto at = static_cast<Vertex>(k - j);
    raw.gates[at - 1] = {GateKind::kXor, {}};
    add(at, j == 1 ? term_vertex[0] : static_cast<Vertex>(at + 1));
    add(at, term_vertex[j]);
  }
  raw.root = xors > 0 ? 1 : term_vertex[0];
  return validate_circuit(raw);
}

CircuitDag compile_to_circuit(const ZhegalkinPolynomial& poly) {
  return rewrite_xor(compile_to_xor_circuit(poly));
}

Assignment assignment_from_bits(std::span<const std::uint8_t> x) {
  Assignment out;
  for (std::size_t j = 0; j < x.size(); ++j) out.emplace("x" + std::to_string(j + 1), x[j] != 0);
  return out;
}

}  // namespace qdag

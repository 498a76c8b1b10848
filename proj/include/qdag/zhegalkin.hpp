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

#ifndef QDAG_ZHEGALKIN_HPP
#define QDAG_ZHEGALKIN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdag/circuit.hpp"

namespace qdag {

/// A set of variable indices, ascending and duplicate-free.
using Monomial = std::vector<std::uint32_t>;

/// a ⊕ C_1 ⊕ ... ⊕ C_k where each C_i is the AND of its variables.
struct ZhegalkinPolynomial {
  bool constant = false;
  std::vector<Monomial> monomials;

  std::size_t k() const { return monomials.size(); }
  /// Highest variable index mentioned, 0 when none.
  std::uint32_t var_count() const;

  friend bool operator==(const ZhegalkinPolynomial&,
                         const ZhegalkinPolynomial&) = default;
};

/// Grammar (whitespace and `#` line comments ignored):
///   poly   := term ('+' term)*
///   term   := '0' | '1' | factor ('*' factor)*
///   factor := 'x' <positive decimal>
/// Constants fold into `constant`; repeated factors collapse; term order is
/// kept. Errors carry the byte offset of the offending token.
ZhegalkinPolynomial parse_anf(std::string_view text);

/// Cancels equal monomials in pairs and sorts the survivors.
ZhegalkinPolynomial normalize(const ZhegalkinPolynomial& poly);

/// "1 + x1*x2 + x3"; "0" or "1" for constants.
std::string to_string(const ZhegalkinPolynomial& poly);

/// Direct evaluation; `x[j - 1]` is variable j and must cover var_count().
bool eval_truth_table(const ZhegalkinPolynomial& poly,
                      std::span<const std::uint8_t> x);

/// Compiles a normalized polynomial with k >= 1 into an AND-OR-NOT circuit:
/// one AND per monomial of degree >= 2 (degree-1 monomials wire their
/// variable directly), a left-folded chain of binary XORs, the constant as
/// output negation, then rewrite_xor. k = 1 with a single variable yields the
/// one-vertex literal circuit. Variables are named "x<j>".
CircuitDag compile_to_circuit(const ZhegalkinPolynomial& poly);

/// Same construction stopped before rewrite_xor.
CircuitDag compile_to_xor_circuit(const ZhegalkinPolynomial& poly);

/// {"x1": x[0], "x2": x[1], ...}.
Assignment assignment_from_bits(std::span<const std::uint8_t> x);

}  // namespace qdag

#endif  // QDAG_ZHEGALKIN_HPP

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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qdag/error.hpp"
#include "test_util.hpp"

namespace qdag {
namespace {

void expect_error(std::string_view text, ErrorCode code, std::size_t offset) {
  try {
    parse_anf(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << text;
    EXPECT_EQ(e.position_kind(), Error::PositionKind::kOffset) << text;
    EXPECT_EQ(e.position(), offset) << text;
  }
}

TEST(ParseAnf, Examples) {
  const auto p = parse_anf("1 + x1*x2 + x3");
  EXPECT_TRUE(p.constant);
  EXPECT_EQ(p.monomials, (std::vector<Monomial>{{1, 2}, {3}}));
  EXPECT_EQ(p.k(), 2u);
  EXPECT_EQ(p.var_count(), 3u);

  EXPECT_EQ(parse_anf("x1*x1").monomials, (std::vector<Monomial>{{1}}));
  EXPECT_EQ(parse_anf("x3 * x1 # trailing comment\n").monomials, (std::vector<Monomial>{{1, 3}}));
  const auto c = parse_anf("1 + 1 + 0");
  EXPECT_FALSE(c.constant);
  EXPECT_EQ(c.k(), 0u);
}

TEST(ParseAnf, Errors) {
  expect_error("x1 + + x2", ErrorCode::kSyntaxError, 5);
  expect_error("x1 x2", ErrorCode::kSyntaxError, 3);
  expect_error("x1 *", ErrorCode::kSyntaxError, 4);
  expect_error("x1 + 2", ErrorCode::kSyntaxError, 5);
  expect_error("x0 + x1", ErrorCode::kVariableIndexZero, 0);
  expect_error("x1 + y", ErrorCode::kSyntaxError, 5);
  try {
    parse_anf("  # nothing\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(Normalize, CancelsAndSorts) {
  const auto z = normalize(parse_anf("x1 + x1"));
  EXPECT_FALSE(z.constant);
  EXPECT_EQ(z.k(), 0u);
  EXPECT_EQ(normalize(parse_anf("x2 + x1")).monomials, (std::vector<Monomial>{{1}, {2}}));
  EXPECT_EQ(to_string(normalize(parse_anf("x3 + 1 + x2*x1 + x4 + x4"))), "1 + x1*x2 + x3");
  EXPECT_EQ(to_string(ZhegalkinPolynomial{}), "0");
  EXPECT_EQ(to_string(ZhegalkinPolynomial{true, {}}), "1");
}

TEST(EvalTruthTable, Examples) {
  const std::vector<std::uint8_t> x{1, 1, 0};
  EXPECT_FALSE(eval_truth_table(parse_anf("1 + x1*x2 + x3"), x));
  const std::vector<std::uint8_t> one{1};
  EXPECT_TRUE(eval_truth_table(parse_anf("x1"), one));
  for (std::size_t mask = 0; mask < 8; ++mask) {
    EXPECT_FALSE(eval_truth_table(ZhegalkinPolynomial{}, testing::bits_of(mask, 3)));
  }
  const std::vector<std::uint8_t> short_x{1};
  EXPECT_THROW(eval_truth_table(parse_anf("x1 + x2"), short_x), Error);
}

TEST(Normalize, PreservesSemantics) {
  std::mt19937_64 gen(11);
  for (int it = 0; it < 200; ++it) {
    const std::size_t vars = 1 + gen() % 8;
    const auto p = testing::random_poly(gen, vars, 12, 1, 3);
    const auto q = normalize(p);
    for (std::size_t mask = 0; mask < (std::size_t{1} << vars); ++mask) {
      const auto x = testing::bits_of(mask, vars);
      ASSERT_EQ(eval_truth_table(p, x), eval_truth_table(q, x));
    }
  }
}

TEST(Compile, CountsForDegreeTwoTerms) {
  const auto p = normalize(parse_anf("x1*x2 + x2*x3*x4 + x1*x5"));
  const CircuitDag c = compile_to_circuit(p);
  EXPECT_EQ(c.function_vertex_count(), 9u);
  EXPECT_EQ(c.dag().m(), 6u * 2 + 7);
  EXPECT_FALSE(c.has_xor());
  EXPECT_EQ(c.root(), 1u);
  EXPECT_EQ(testing::circuit_truth_table(c, 5).size(), 32u);
}

TEST(Compile, SingleTerms) {
  const CircuitDag and2 = compile_to_circuit(parse_anf("x1*x2"));
  EXPECT_EQ(and2.function_vertex_count(), 1u);
  EXPECT_EQ(and2.dag().m(), 2u);
  EXPECT_EQ(and2.gate(1).kind, GateKind::kAnd);

  const CircuitDag lit = compile_to_circuit(parse_anf("1 + x2"));
  EXPECT_EQ(lit.dag().n(), 1u);
  EXPECT_TRUE(lit.output_negated());
  EXPECT_TRUE(eval_circuit_classical(lit, {{"x2", false}}));

  try {
    compile_to_circuit(parse_anf("x1 + x1 + 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConstantPolynomial);
  }
}

TEST(Compile, XorStageCounts) {
  const auto p = normalize(parse_anf("x1*x2 + x3 + x2*x4"));
  const CircuitDag x = compile_to_xor_circuit(p);
  EXPECT_EQ(x.function_vertex_count(), 2u + 2u);
  EXPECT_TRUE(x.has_xor());
  EXPECT_EQ(x.gate(1).kind, GateKind::kXor);
}

TEST(Compile, MatchesTruthTable) {
  std::mt19937_64 gen(5);
  for (int it = 0; it < 200; ++it) {
    const std::size_t vars = 1 + gen() % 10;
    const auto p = normalize(testing::random_poly(gen, vars, 10, 1, 4));
    if (p.k() == 0) continue;
    const CircuitDag c = compile_to_circuit(p);
    const auto table = testing::circuit_truth_table(c, vars);
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
      ASSERT_EQ(table[mask] != 0, eval_truth_table(p, testing::bits_of(mask, vars)))
          << to_string(p) << " mask " << mask;
    }
  }
}

TEST(Compile, QuantumExactAgrees) {
  const auto p = normalize(parse_anf("1 + x1*x2 + x3"));
  const CircuitDag c = compile_to_circuit(p);
  for (std::size_t mask = 0; mask < 8; ++mask) {
    const auto x = testing::bits_of(mask, 3);
    EXPECT_EQ(eval_circuit_quantum(c, assignment_from_bits(x), SimConfig{}, mask).value,
              eval_truth_table(p, x));
  }
}

TEST(Printer, RoundTrip) {
  std::mt19937_64 gen(8);
  for (int it = 0; it < 300; ++it) {
    const auto p = normalize(testing::random_poly(gen, 1 + gen() % 12, 8, 1, 5));
    EXPECT_EQ(parse_anf(to_string(p)), p) << to_string(p);
  }
}

}  // namespace
}  // namespace qdag

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

#include "qdag/dp_engine.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qdag/error.hpp"
#include "test_util.hpp"

namespace qdag {
namespace {

DpProblem uniform_problem(const Dag& dag, Combiner h, SinkEval sinks) {
  DpProblem p;
  p.combiners.assign(dag.n_hat(), h);
  p.sink_eval = std::move(sinks);
  return p;
}

TEST(RunDp, SingleEdgeMax) {
  const std::vector<Edge> edges{{1, 2}};
  const Dag dag = validate_dag(2, edges);
  const DpProblem p = uniform_problem(dag, Combiner::kMax, [](Vertex) { return Value(7); });
  const DpResult r = run_dp(dag, p, SimConfig{}, 0);
  EXPECT_EQ(r.answer, Value(7));
  EXPECT_EQ(r.boost, 1u);
  EXPECT_EQ(r.ledger.total(), 8u);  // one ⌈8·√1⌉ run
}

TEST(RunDp, TriangleOr) {
  const std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 3}};
  const Dag dag = validate_dag(3, edges);
  const DpProblem p = uniform_problem(dag, Combiner::kOr, [](Vertex) { return Value(1); });
  const DpResult r = run_dp(dag, p, SimConfig{}, 0);
  EXPECT_EQ(r.table.at(1), Value(1));
  EXPECT_EQ(r.table.at(2), Value(1));
  EXPECT_EQ(r.answer, Value(1));
}

TEST(RunDp, StarAndOfZeros) {
  std::vector<Edge> edges;
  for (Vertex j = 2; j <= 101; ++j) edges.push_back({1, j});
  const Dag dag = validate_dag(101, edges);
  const DpProblem p = uniform_problem(dag, Combiner::kAnd, [](Vertex) { return Value(0); });
  EXPECT_EQ(run_dp(dag, p, SimConfig{}, 0).answer, Value(0));
  const DpProblem q = uniform_problem(dag, Combiner::kNand, [](Vertex) { return Value(0); });
  EXPECT_EQ(run_dp(dag, q, SimConfig{}, 0).answer, Value(1));
}

TEST(RunDp, MissingCombiner) {
  const std::vector<Edge> edges{{1, 2}, {2, 3}};
  const Dag dag = validate_dag(3, edges);
  DpProblem p = uniform_problem(dag, Combiner::kOr, [](Vertex) { return Value(1); });
  p.combiners[0].reset();
  try {
    run_dp(dag, p, SimConfig{}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingCombiner);
  }
  EXPECT_THROW(classical_dp(dag, p), Error);
}

TEST(RunDp, TypeMismatch) {
  const std::vector<Edge> edges{{1, 2}, {1, 3}};
  const Dag dag = validate_dag(3, edges);
  const DpProblem p = uniform_problem(dag, Combiner::kAnd, [](Vertex v) { return Value(v); });
  try {
    run_dp(dag, p, SimConfig{}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTypeMismatch);
  }
}

TEST(RunDp, ExactMatchesClassicalOnRandomDags) {
  std::mt19937_64 gen(2024);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Dag dag = testing::random_dag(2 + seed % 60, 0.15, false, seed);
    const bool boolean = seed % 2 == 0;
    DpProblem p;
    std::vector<std::int64_t> sink_values(dag.n() + 1);
    for (auto& s : sink_values) s = boolean ? static_cast<std::int64_t>(gen() & 1) : static_cast<std::int64_t>(gen() % 100) - 50;
    p.sink_eval = [sink_values](Vertex v) { return Value(sink_values[v]); };
    for (std::size_t i = 0; i < dag.n_hat(); ++i) {
      const auto pick = gen() % 3;
      p.combiners.push_back(boolean ? (pick == 0 ? Combiner::kAnd : pick == 1 ? Combiner::kOr : Combiner::kNand)
                                    : (pick == 0 ? Combiner::kMin : Combiner::kMax));
    }
    const DpResult r = run_dp(dag, p, SimConfig{}, seed);
    const std::vector<Value> ref = classical_dp(dag, p);
    for (Vertex v = 1; v <= dag.n(); ++v) ASSERT_EQ(r.table.at(v), ref[v - 1]) << "seed " << seed << " v " << v;
  }
}

TEST(RunDp, LedgerIsSumOfPerVertexContracts) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Dag dag = testing::random_dag(10 + seed, 0.2, false, seed);
    const bool boolean = seed % 2 == 1;
    const DpProblem p = uniform_problem(dag, boolean ? Combiner::kOr : Combiner::kMax,
                                        [](Vertex v) { return Value(v % 2); });
    SimConfig c;
    c.mode = SimMode::kStochastic;
    const DpResult r = run_dp(dag, p, c, seed);
    std::uint64_t expected = 0;
    for (Vertex v = 1; v <= dag.n_hat(); ++v) {
      const std::size_t d = dag.out_degree(v);
      const std::uint64_t t = boolean ? boosted_search_total_cost(d, r.boost, c)
                                      : boosted_extremum_cost(d, r.boost, c);
      EXPECT_EQ(r.ledger.vertex(v), t);
      expected += t;
    }
    EXPECT_EQ(r.ledger.total(), expected);
    EXPECT_EQ(r.ledger.vertex(0), 0u);
    EXPECT_EQ(r.boost, default_boost(dag.n_hat()));
  }
}

TEST(RunDp, StochasticMaxNeverOverestimates) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Dag dag = testing::random_dag(30, 0.1, false, seed % 20);
    const DpProblem p = uniform_problem(dag, Combiner::kMax,
                                        [](Vertex v) { return Value(static_cast<std::int64_t>(v * 7919 % 101)); });
    SimConfig c;
    c.mode = SimMode::kStochastic;
    c.boost = 1;
    const DpResult r = run_dp(dag, p, c, seed);
    const auto ref = classical_dp(dag, p);
    for (Vertex v = 1; v <= dag.n_hat(); ++v) ASSERT_LE(r.table.at(v), ref[v - 1]);
  }
}

TEST(RunDp, StopAtLeavesPrefixUnwritten) {
  const std::vector<Edge> edges{{1, 2}, {2, 3}, {3, 4}};
  const Dag dag = validate_dag(4, edges);
  DpProblem p = uniform_problem(dag, Combiner::kMax, [](Vertex) { return Value(3); });
  p.stop_at = 2;
  const DpResult r = run_dp(dag, p, SimConfig{}, 0);
  EXPECT_EQ(r.answer, Value(3));
  EXPECT_FALSE(r.table.written(1));
  EXPECT_TRUE(r.table.written(2));
}

TEST(ValueTable, WriteOnce) {
  ValueTable t(2, [](Vertex) { return Value(9); });
  EXPECT_THROW(t.at(1), std::logic_error);
  t.write(1, Value(4));
  EXPECT_EQ(t.at(1), Value(4));
  EXPECT_EQ(t.at(5), Value(9));
  EXPECT_THROW(t.write(1, Value(5)), std::logic_error);
}

}  // namespace
}  // namespace qdag

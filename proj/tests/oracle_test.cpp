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

#include "qdag/oracle.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "qdag/dag.hpp"
#include "qdag/error.hpp"

namespace qdag {
namespace {

TEST(ChargedRead, AdjacencyEntry) {
  const std::vector<Edge> edges{{1, 2}, {1, 3}};
  const Dag dag = validate_dag(3, edges);
  QueryLedger ledger;
  const Source<Vertex> d1 = adjacency_source(dag, 1);
  EXPECT_EQ(charged_read(ledger, d1, 2, QueryCategory::kAdjacency), 3u);
  EXPECT_EQ(ledger.category(QueryCategory::kAdjacency), 1u);
  EXPECT_EQ(ledger.total(), 1u);
  charged_read(ledger, d1, 1, QueryCategory::kAdjacency);
  EXPECT_EQ(ledger.total(), 2u);
}

TEST(ChargedRead, FullScanChargesDegree) {
  const Source<int> src(37, [](std::size_t p) { return static_cast<int>(p * p); });
  QueryLedger ledger;
  long sum = 0;
  for (std::size_t p = 1; p <= src.size(); ++p) {
    sum += charged_read(ledger, src, p, QueryCategory::kValue);
  }
  EXPECT_EQ(ledger.total(), 37u);
  EXPECT_EQ(sum, 37L * 38 * 75 / 6);
}

TEST(ChargedRead, OutOfRange) {
  const Source<int> src(2, [](std::size_t) { return 0; });
  QueryLedger ledger;
  try {
    charged_read(ledger, src, 3, QueryCategory::kValue);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  EXPECT_THROW(charged_read(ledger, src, 0, QueryCategory::kValue), Error);
  EXPECT_EQ(ledger.total(), 0u);
}

TEST(Ledger, SnapshotAndAttribution) {
  QueryLedger ledger;
  const LedgerTotals fresh = snapshot(ledger);
  EXPECT_EQ(fresh.total, 0u);
  for (auto c : fresh.by_category) EXPECT_EQ(c, 0u);
  EXPECT_TRUE(fresh.per_vertex.empty());

  for (int i = 0; i < 5; ++i) ledger.charge(QueryCategory::kValue);
  EXPECT_EQ(snapshot(ledger).total, 5u);
  EXPECT_EQ(snapshot(ledger), snapshot(ledger));
  EXPECT_EQ(ledger.vertex(0), 5u);

  ledger.attribute_to(4);
  ledger.charge(QueryCategory::kWeight, 3);
  EXPECT_EQ(ledger.vertex(4), 3u);
  EXPECT_EQ(ledger.vertex(7), 0u);

  QueryLedger other;
  other.attribute_to(4);
  other.charge(QueryCategory::kVerification, 2);
  ledger.merge(other);
  EXPECT_EQ(ledger.total(), 10u);
  EXPECT_EQ(ledger.vertex(4), 5u);
  EXPECT_EQ(ledger.category(QueryCategory::kVerification), 2u);
}

TEST(RandomStream, Deterministic) {
  RandomStream a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs |= x != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(RandomStream, SubstreamsIndependentOfParentPosition) {
  RandomStream parent(9);
  const RandomStream s1 = parent.substream(5);
  parent.next_u64();
  RandomStream s2 = parent.substream(5);
  RandomStream s1c = s1;
  EXPECT_EQ(s1c.next_u64(), s2.next_u64());
  EXPECT_NE(RandomStream(9).substream(5).next_u64(), RandomStream(9).substream(6).next_u64());
}

TEST(RandomStream, UniformAndUnitRanges) {
  RandomStream r(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto u = r.uniform(7);
    ASSERT_LT(u, 7u);
    seen.insert(u);
    const double x = r.unit();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
  EXPECT_EQ(seen.size(), 7u);
}

}  // namespace
}  // namespace qdag

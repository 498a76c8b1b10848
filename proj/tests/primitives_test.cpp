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

#include "qdag/primitives.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qdag/error.hpp"
#include "test_util.hpp"

namespace qdag {
namespace {

Source<bool> equals_one(const std::vector<int>& v) {
  return Source<bool>(v.size(), [v](std::size_t p) { return v[p - 1] == 1; });
}

Source<Value> values_of(const std::vector<std::int64_t>& v) {
  return Source<Value>(v.size(), [v](std::size_t p) { return Value(v[p - 1]); });
}

SimConfig stochastic() {
  SimConfig c;
  c.mode = SimMode::kStochastic;
  return c;
}

TEST(Costs, CeilScaledSqrtIsExact) {
  EXPECT_EQ(ceil_scaled_sqrt({2, 1}, 3), 4u);   // 2·1.732 = 3.46
  EXPECT_EQ(ceil_scaled_sqrt({2, 1}, 64), 16u);
  EXPECT_EQ(ceil_scaled_sqrt({8, 1}, 9), 24u);
  EXPECT_EQ(ceil_scaled_sqrt({1, 3}, 9), 1u);
  EXPECT_EQ(ceil_scaled_sqrt({3, 2}, 5), 4u);   // 1.5·2.236 = 3.35
  for (std::uint64_t x = 1; x < 5000; ++x) {
    const double r = 2.0 * std::sqrt(static_cast<double>(x));
    if (std::abs(r - std::round(r)) > 1e-9) {
      EXPECT_EQ(ceil_scaled_sqrt({2, 1}, x), static_cast<std::uint64_t>(std::ceil(r)));
    }
  }
}

TEST(Costs, BoostDefaults) {
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(2), 1u);
  EXPECT_EQ(ceil_log2(17), 5u);
  EXPECT_EQ(default_boost(1), 1u);
  EXPECT_EQ(default_boost(16), 8u);
  EXPECT_EQ(default_boost(100), 14u);
}

TEST(Costs, ConfigValidation) {
  SimConfig c;
  EXPECT_NO_THROW(c.validate());
  c.epsilon_base = 0.7;
  EXPECT_THROW(c.validate(), Error);
  c.epsilon_base = 0.5;
  c.boost = 0;
  EXPECT_THROW(c.validate(), Error);
  c.boost.reset();
  c.c_search = {0, 1};
  EXPECT_THROW(c.validate(), Error);
}

TEST(Search, NoWitnessIsAlwaysNone) {
  const auto pred = equals_one({0, 0, 0});
  for (SimMode mode : {SimMode::kExact, SimMode::kStochastic}) {
    SimConfig c;
    c.mode = mode;
    RandomStream rng(3);
    for (int i = 0; i < 200; ++i) {
      QueryLedger ledger;
      EXPECT_FALSE(grover_search(pred, c, rng, ledger).found.has_value());
      EXPECT_FALSE(boosted_search_aa(pred, 5, c, rng, ledger).found.has_value());
    }
  }
}

TEST(Search, ExactCost) {
  const auto pred = equals_one({0, 1, 0});
  RandomStream rng(0);
  QueryLedger ledger;
  const SearchOutcome out = grover_search(pred, SimConfig{}, rng, ledger);
  EXPECT_EQ(out.found, 2u);
  EXPECT_EQ(out.queries_charged, 5u);
  EXPECT_EQ(ledger.total(), 5u);
  EXPECT_EQ(ledger.category(QueryCategory::kVerification), 1u);
}

TEST(Search, BoostedCost) {
  std::vector<int> v(16, 0);
  v[9] = 1;
  RandomStream rng(0);
  QueryLedger ledger;
  const SearchOutcome out = boosted_search_aa(equals_one(v), 4, SimConfig{}, rng, ledger);
  EXPECT_EQ(out.found, 10u);
  EXPECT_EQ(out.queries_charged, 17u);
  EXPECT_EQ(search_cost(16, 4, SimConfig{}), 16u);
}

TEST(Search, CostIndependentOfOutcome) {
  const auto hit = equals_one({0, 1, 0, 0, 0});
  const auto miss = equals_one({0, 0, 0, 0, 0});
  RandomStream rng(8);
  const SimConfig c = stochastic();
  for (int i = 0; i < 500; ++i) {
    QueryLedger a, b;
    EXPECT_EQ(boosted_search_aa(hit, 3, c, rng, a).queries_charged,
              boosted_search_total_cost(5, 3, c));
    EXPECT_EQ(boosted_search_aa(miss, 3, c, rng, b).queries_charged,
              boosted_search_total_cost(5, 3, c));
  }
}

TEST(Search, StochasticFoundRate) {
  const auto pred = equals_one({0, 1, 0});
  RandomStream rng(17);
  const SimConfig c = stochastic();
  const std::size_t trials = 10000;
  std::size_t found = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    QueryLedger ledger;
    const auto out = grover_search(pred, c, rng, ledger);
    if (out.found) {
      ASSERT_EQ(*out.found, 2u);
      ++found;
    }
  }
  // 99% two-sided interval for Binomial(10^4, 0.5).
  const std::size_t hi = testing::binomial_upper_quantile(trials, 0.5, 0.995);
  const std::size_t lo = trials - hi;
  EXPECT_GE(found, lo);
  EXPECT_LE(found, hi);
}

TEST(Search, BoostedMissRate) {
  const auto pred = equals_one({0, 0, 1, 0, 1, 0, 0});
  RandomStream rng(23);
  const SimConfig c = stochastic();
  const std::size_t trials = 100000;
  const double p = std::pow(0.5, 8);
  std::size_t missed = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    QueryLedger ledger;
    const auto out = boosted_search_aa(pred, 8, c, rng, ledger);
    if (!out.found) {
      ++missed;
    } else {
      ASSERT_TRUE(*out.found == 3 || *out.found == 5);
    }
  }
  const double sigma = std::sqrt(p * (1 - p) / trials);
  EXPECT_LE(static_cast<double>(missed) / trials, p + 3 * sigma);
}

TEST(Search, EmptyDomain) {
  RandomStream rng(0);
  QueryLedger ledger;
  EXPECT_THROW(grover_search(equals_one({}), SimConfig{}, rng, ledger), Error);
}

TEST(Extremum, SingleValue) {
  RandomStream rng(0);
  for (int i = 0; i < 100; ++i) {
    QueryLedger ledger;
    const auto out = dh_extremum(Direction::kMax, values_of({7}), stochastic(), rng, ledger);
    EXPECT_EQ(out.arg, 1u);
    EXPECT_EQ(out.value, Value(7));
  }
}

TEST(Extremum, ExactTieResolvesToSmallestIndex) {
  RandomStream rng(0);
  QueryLedger ledger;
  const auto out = dh_extremum(Direction::kMax, values_of({5, 2, 9, 9}), SimConfig{}, rng, ledger);
  EXPECT_EQ(out.arg, 3u);
  EXPECT_EQ(out.value, Value(9));
  EXPECT_EQ(out.queries_charged, 16u);
  EXPECT_EQ(ledger.total(), 16u);
  const auto mn = dh_extremum(Direction::kMin, values_of({4, 1, 1}), SimConfig{}, rng, ledger);
  EXPECT_EQ(mn.arg, 2u);
}

TEST(Extremum, ErrorBranchUnderestimates) {
  RandomStream rng(5);
  std::size_t wrong = 0;
  for (int i = 0; i < 2000; ++i) {
    QueryLedger ledger;
    const auto out = dh_extremum(Direction::kMax, values_of({5, 2, 9}), stochastic(), rng, ledger);
    if (out.value != Value(9)) {
      EXPECT_EQ(out.value, Value(5));
      EXPECT_EQ(out.arg, 1u);
      ++wrong;
    }
  }
  EXPECT_GT(wrong, 800u);
  EXPECT_LT(wrong, 1200u);
}

TEST(Extremum, AllEqualNeverWrong) {
  RandomStream rng(5);
  for (int i = 0; i < 500; ++i) {
    QueryLedger ledger;
    const auto out = dh_extremum(Direction::kMin, values_of({4, 4, 4}), stochastic(), rng, ledger);
    EXPECT_EQ(out.value, Value(4));
  }
}

TEST(Extremum, InfinitiesOrder) {
  const Source<Value> src(3, [](std::size_t p) {
    return p == 1 ? Value::neg_inf() : p == 2 ? Value(-3) : Value::pos_inf();
  });
  RandomStream rng(0);
  QueryLedger ledger;
  EXPECT_EQ(dh_extremum(Direction::kMax, src, SimConfig{}, rng, ledger).arg, 3u);
  EXPECT_EQ(dh_extremum(Direction::kMin, src, SimConfig{}, rng, ledger).arg, 1u);
}

TEST(BoostedExtremum, Cost) {
  RandomStream rng(0);
  QueryLedger ledger;
  const auto out = boosted_extremum(Direction::kMin, values_of({3, 1, 4, 1, 5, 9, 2, 6, 5}), 3,
                                    stochastic(), rng, ledger);
  EXPECT_EQ(out.queries_charged, 72u);
  EXPECT_EQ(ledger.total(), 72u);
  EXPECT_EQ(boosted_extremum_cost(9, 3, SimConfig{}), 72u);
}

TEST(BoostedExtremum, KOneMatchesSingleRun) {
  const auto src = values_of({3, 1, 4, 1, 5});
  RandomStream a(77), b(77);
  for (int i = 0; i < 1000; ++i) {
    QueryLedger la, lb;
    const auto x = boosted_extremum(Direction::kMax, src, 1, stochastic(), a, la);
    const auto y = dh_extremum(Direction::kMax, src, stochastic(), b, lb);
    ASSERT_EQ(x.arg, y.arg);
    ASSERT_EQ(la.total(), lb.total());
  }
}

TEST(BoostedExtremum, ErrorRate) {
  const auto src = values_of({3, 1, 4, 1, 5});
  RandomStream rng(99);
  const std::size_t trials = 100000;
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    QueryLedger ledger;
    const auto out = boosted_extremum(Direction::kMax, src, 10, stochastic(), rng, ledger);
    ASSERT_LE(out.value, Value(5));
    if (out.value != Value(5)) ++wrong;
  }
  const double p = std::pow(0.5, 10);
  EXPECT_LE(static_cast<double>(wrong) / trials, p + 3 * std::sqrt(p * (1 - p) / trials));
}

TEST(Primitives, SameSeedSameAnswers) {
  const auto src = values_of({8, 3, 8, 1, 0, 7});
  const auto pred = equals_one({0, 1, 1, 0, 1});
  RandomStream a(4), b(4);
  for (int i = 0; i < 300; ++i) {
    QueryLedger la, lb;
    EXPECT_EQ(dh_extremum(Direction::kMin, src, stochastic(), a, la).arg,
              dh_extremum(Direction::kMin, src, stochastic(), b, lb).arg);
    EXPECT_EQ(grover_search(pred, stochastic(), a, la).found,
              grover_search(pred, stochastic(), b, lb).found);
  }
}

}  // namespace
}  // namespace qdag

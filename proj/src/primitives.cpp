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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qdag/error.hpp"

namespace qdag {

void SimConfig::validate() const {
  if (!(epsilon_base > 0.0 && epsilon_base <= 0.5)) {
    throw Error(ErrorCode::kInvalidParams, "epsilon_base must lie in (0, 0.5]");
  }
  if (c_search.num == 0 || c_search.den == 0 || c_extremum.num == 0 ||
      c_extremum.den == 0) {
    throw Error(ErrorCode::kInvalidParams, "cost constants must be positive");
  }
  if ((boost && *boost == 0) || (final_boost && *final_boost == 0)) {
    throw Error(ErrorCode::kInvalidParams, "boost count must be at least 1");
  }
}

std::size_t ceil_log2(std::size_t x) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < x) ++r;
  return r;
}

std::size_t default_boost(std::size_t count) {
  std::size_t k = 2 * ceil_log2(count == 0 ? 1 : count);
  return k == 0 ? 1 : k;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t ceil_isqrt(u128 y) {
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(y)));
  while (r * r > y) --r;
  while (r * r < y) ++r;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t ceil_scaled_sqrt(Rational c, std::uint64_t x) {
  // ⌈(p/q)·√x⌉ is the least r with r²·q² >= p²·x.
  const u128 num = static_cast<u128>(c.num) * c.num * x;
  const u128 den = static_cast<u128>(c.den) * c.den;
  return ceil_isqrt((num + den - 1) / den);
}

std::uint64_t search_cost(std::size_t d, std::size_t k, const SimConfig& cfg) {
  return ceil_scaled_sqrt(cfg.c_search, static_cast<std::uint64_t>(k) * d);
}

std::uint64_t boosted_search_total_cost(std::size_t d, std::size_t k,
                                        const SimConfig& cfg) {
  return search_cost(d, k, cfg) + 1;
}

std::uint64_t extremum_cost(std::size_t d, const SimConfig& cfg) {
  return ceil_scaled_sqrt(cfg.c_extremum, d);
}

std::uint64_t boosted_extremum_cost(std::size_t d, std::size_t k,
                                    const SimConfig& cfg) {
  return k * extremum_cost(d, cfg);
}

namespace {

void require_nonempty(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::kEmptyDomain, "primitive called on an empty list");
}

SearchOutcome search(const Source<bool>& predicate, std::size_t k,
                     const SimConfig& config, RandomStream& rng,
                     QueryLedger& ledger, QueryCategory category) {
  const std::size_t d = predicate.size();
  require_nonempty(d);
  if (k == 0) throw Error(ErrorCode::kInvalidParams, "boost count must be at least 1");

  const std::uint64_t before = ledger.total();
  const std::vector<bool> marked =
      superposed_sweep(ledger, predicate, search_cost(d, k, config), category);
  std::vector<std::size_t> witnesses;
  for (std::size_t p = 0; p < d; ++p) {
    if (marked[p]) witnesses.push_back(p + 1);
  }

  std::optional<std::size_t> candidate;
  if (!witnesses.empty()) {
    if (config.mode == SimMode::kExact) {
      candidate = witnesses.front();
    } else {
      const double miss = std::pow(config.epsilon_base, static_cast<double>(k));
      if (!rng.bernoulli(miss)) candidate = witnesses[rng.uniform(witnesses.size())];
    }
  }

  // The measured outcome is always checked with one classical query.
  SearchOutcome out;
  const bool verified =
      charged_read(ledger, predicate, candidate.value_or(1), QueryCategory::kVerification);
  if (candidate) {
    if (!verified) throw std::logic_error("search returned a non-witness");
    out.found = candidate;
  }
  out.queries_charged = ledger.total() - before;
  return out;
}

std::size_t best_position(Direction direction, const std::vector<Value>& values,
                          const Value* excluded) {
  std::size_t best = 0;
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (excluded && values[p] == *excluded) continue;
    if (best == 0) {
      best = p + 1;
      continue;
    }
    const Value& cur = values[best - 1];
    if (direction == Direction::kMax ? values[p] > cur : values[p] < cur) best = p + 1;
  }
  return best;
}

}  // namespace

SearchOutcome grover_search(const Source<bool>& predicate, const SimConfig& config,
                            RandomStream& rng, QueryLedger& ledger,
                            QueryCategory category) {
  return search(predicate, 1, config, rng, ledger, category);
}

SearchOutcome boosted_search_aa(const Source<bool>& predicate, std::size_t k,
                                const SimConfig& config, RandomStream& rng,
                                QueryLedger& ledger, QueryCategory category) {
  return search(predicate, k, config, rng, ledger, category);
}

ExtremumOutcome dh_extremum(Direction direction, const Source<Value>& values,
                            const SimConfig& config, RandomStream& rng,
                            QueryLedger& ledger, QueryCategory category) {
  const std::size_t d = values.size();
  require_nonempty(d);
  const std::vector<Value> seen =
      superposed_sweep(ledger, values, extremum_cost(d, config), category);

  std::size_t arg = best_position(direction, seen, nullptr);
  if (config.mode == SimMode::kStochastic && rng.bernoulli(config.epsilon_base)) {
    const Value truth = seen[arg - 1];
    // Nothing else to return when every entry equals the extremum.
    if (std::size_t fallback = best_position(direction, seen, &truth); fallback != 0) {
      arg = fallback;
    }
  }
  return {arg, seen[arg - 1], extremum_cost(d, config)};
}

ExtremumOutcome boosted_extremum(Direction direction, const Source<Value>& values,
                                 std::size_t k, const SimConfig& config,
                                 RandomStream& rng, QueryLedger& ledger,
                                 QueryCategory category) {
  require_nonempty(values.size());
  if (k == 0) throw Error(ErrorCode::kInvalidParams, "boost count must be at least 1");
  ExtremumOutcome best = dh_extremum(direction, values, config, rng, ledger, category);
  for (std::size_t run = 1; run < k; ++run) {
    ExtremumOutcome next = dh_extremum(direction, values, config, rng, ledger, category);
    best.queries_charged += next.queries_charged;
    const bool better = direction == Direction::kMax ? next.value > best.value
                                                     : next.value < best.value;
    if (better || (next.value == best.value && next.arg < best.arg)) {
      best.arg = next.arg;
      best.value = next.value;
    }
  }
  return best;
}

}  // namespace qdag

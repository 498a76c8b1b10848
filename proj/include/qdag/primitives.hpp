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

#ifndef QDAG_PRIMITIVES_HPP
#define QDAG_PRIMITIVES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "qdag/oracle.hpp"
#include "qdag/value.hpp"

namespace qdag {

// Contract-level models of the quantum subroutines. Each call bills a
// deterministic cost that depends only on (d, k, cost constants) and draws
// its answer from the documented error distribution. No amplitudes are
// simulated.

enum class SimMode { kExact, kStochastic };

/// Positive rational cost constant.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
};

struct SimConfig {
  SimMode mode = SimMode::kExact;
  double epsilon_base = 0.5;
  Rational c_search{2, 1};
  Rational c_extremum{8, 1};
  /// Overrides the per-algorithm default boost count when set.
  std::optional<std::size_t> boost;
  /// Overrides the diameter's final-maximum boost count when set.
  std::optional<std::size_t> final_boost;

  /// Throws InvalidParams unless 0 < epsilon <= 0.5, constants > 0, k >= 1.
  void validate() const;
};

/// ⌈log2 x⌉ for x >= 1.
std::size_t ceil_log2(std::size_t x);
/// max(1, 2⌈log2 count⌉): the boost count used by the DP loops.
std::size_t default_boost(std::size_t count);
/// ⌈c·√x⌉, computed exactly in integers.
std::uint64_t ceil_scaled_sqrt(Rational c, std::uint64_t x);

/// Search-phase cost of boosted search: ⌈c_search·√(k·d)⌉.
std::uint64_t search_cost(std::size_t d, std::size_t k, const SimConfig& cfg);
/// Full cost of a boosted search, verification query included.
std::uint64_t boosted_search_total_cost(std::size_t d, std::size_t k,
                                        const SimConfig& cfg);
/// Cost of one extremum run: ⌈c_extremum·√d⌉.
std::uint64_t extremum_cost(std::size_t d, const SimConfig& cfg);
/// k·⌈c_extremum·√d⌉.
std::uint64_t boosted_extremum_cost(std::size_t d, std::size_t k,
                                    const SimConfig& cfg);

struct SearchOutcome {
  std::optional<std::size_t> found;
  std::uint64_t queries_charged = 0;
};

enum class Direction { kMax, kMin };

struct ExtremumOutcome {
  std::size_t arg = 0;
  Value value;
  std::uint64_t queries_charged = 0;
};

/// Grover search for a position where `predicate` is true. Never returns a
/// non-witness; in stochastic mode misses an existing witness with
/// probability epsilon_base.
SearchOutcome grover_search(const Source<bool>& predicate,
                            const SimConfig& config, RandomStream& rng,
                            QueryLedger& ledger,
                            QueryCategory category = QueryCategory::kValue);

/// Search boosted by amplitude amplification: one pass of cost
/// ⌈c_search·√(k·d)⌉ with miss probability epsilon_base^k.
SearchOutcome boosted_search_aa(const Source<bool>& predicate, std::size_t k,
                                const SimConfig& config, RandomStream& rng,
                                QueryLedger& ledger,
                                QueryCategory category = QueryCategory::kValue);

/// Dürr–Høyer extremum finding. On error (probability epsilon_base) returns
/// the extremum over the positions that do not attain the true one, so a
/// wrong MAX is always a strict underestimate and a wrong MIN a strict
/// overestimate.
ExtremumOutcome dh_extremum(Direction direction, const Source<Value>& values,
                            const SimConfig& config, RandomStream& rng,
                            QueryLedger& ledger,
                            QueryCategory category = QueryCategory::kValue);

/// k independent dh_extremum runs combined classically.
ExtremumOutcome boosted_extremum(Direction direction,
                                 const Source<Value>& values, std::size_t k,
                                 const SimConfig& config, RandomStream& rng,
                                 QueryLedger& ledger,
                                 QueryCategory category = QueryCategory::kValue);

}  // namespace qdag

#endif  // QDAG_PRIMITIVES_HPP

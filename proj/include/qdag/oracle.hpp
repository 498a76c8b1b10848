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

#ifndef QDAG_ORACLE_HPP
#define QDAG_ORACLE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdag/dag.hpp"
#include "qdag/error.hpp"

namespace qdag {

enum class QueryCategory : std::uint8_t {
  kAdjacency = 0,
  kValue = 1,
  kWeight = 2,
  kVerification = 3,
};
inline constexpr std::size_t kQueryCategoryCount = 4;
std::string_view query_category_name(QueryCategory c);

struct LedgerTotals {
  std::uint64_t total = 0;
  std::array<std::uint64_t, kQueryCategoryCount> by_category{};
  /// Vertex 0 collects charges made outside any vertex's processing.
  std::map<Vertex, std::uint64_t> per_vertex;

  std::uint64_t category(QueryCategory c) const {
    return by_category[static_cast<std::size_t>(c)];
  }
  friend bool operator==(const LedgerTotals&, const LedgerTotals&) = default;
};

/// Charged-query counters for one run. Charges go to the vertex set by
/// `attribute_to` (0 when none is set).
class QueryLedger {
 public:
  void charge(QueryCategory category, std::uint64_t count = 1);
  void attribute_to(Vertex v) { current_ = v; }
  Vertex attributed_vertex() const { return current_; }

  std::uint64_t total() const { return totals_.total; }
  std::uint64_t category(QueryCategory c) const { return totals_.category(c); }
  std::uint64_t vertex(Vertex v) const;

  /// Adds another ledger's counters into this one.
  void merge(const QueryLedger& other);

  const LedgerTotals& totals() const { return totals_; }

 private:
  LedgerTotals totals_;
  Vertex current_ = 0;
};

inline LedgerTotals snapshot(const QueryLedger& ledger) {
  return ledger.totals();
}

/// Counter-based generator: draw i of stream (seed, id) is a pure function of
/// (seed, id, i). Substreams derive a fresh key from the parent key and id.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

  RandomStream substream(std::uint64_t id) const;

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  RandomStream(std::uint64_t key, std::uint64_t counter, int);

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// A 1-based read-only table the oracle answers questions about.
template <typename T>
class Source {
 public:
  using value_type = T;

  Source(std::size_t size, std::function<T(std::size_t)> at)
      : size_(size), at_(std::move(at)) {}

  std::size_t size() const { return size_; }

 private:
  template <typename U>
  friend U charged_read(QueryLedger&, const Source<U>&, std::size_t,
                        QueryCategory);
  template <typename U>
  friend std::vector<U> superposed_sweep(QueryLedger&, const Source<U>&,
                                         std::uint64_t, QueryCategory);

  std::size_t size_;
  std::function<T(std::size_t)> at_;
};

/// One classical inspection: returns entry `position` (1-based) and charges
/// exactly one query.
template <typename T>
T charged_read(QueryLedger& ledger, const Source<T>& source,
               std::size_t position, QueryCategory category) {
  if (position < 1 || position > source.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "oracle read at position " + std::to_string(position) +
                    " outside 1.." + std::to_string(source.size()));
  }
  ledger.charge(category);
  return source.at_(position);
}

/// Hands a simulated quantum subroutine the whole table at once and bills the
/// subroutine's contract cost `charge` instead of one query per entry.
template <typename T>
std::vector<T> superposed_sweep(QueryLedger& ledger, const Source<T>& source,
                                std::uint64_t charge, QueryCategory category) {
  ledger.charge(category, charge);
  std::vector<T> out;
  out.reserve(source.size());
  for (std::size_t p = 1; p <= source.size(); ++p) out.push_back(source.at_(p));
  return out;
}

/// D_v as an oracle table.
Source<Vertex> adjacency_source(const Dag& dag, Vertex v);

}  // namespace qdag

#endif  // QDAG_ORACLE_HPP

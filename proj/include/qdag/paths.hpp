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

#ifndef QDAG_PATHS_HPP
#define QDAG_PATHS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdag/dag.hpp"
#include "qdag/oracle.hpp"
#include "qdag/primitives.hpp"
#include "qdag/value.hpp"

namespace qdag {

/// t[i - 1] is the longest s→i path length, NEG_INF when unreachable.
struct LongestPathTable {
  Vertex source = 1;
  std::vector<Value> t;

  friend bool operator==(const LongestPathTable&,
                         const LongestPathTable&) = default;
};

/// Rows z = 1..n_hat of single-source shortest distances; POS_INF marks "no
/// path" (reported as -1).
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<std::vector<Value>> rows;  // rows[z - 1][i - 1]
  std::int64_t diam = 0;
};

struct LongestPathRun {
  LongestPathTable table;
  QueryLedger ledger;
  std::size_t boost = 0;
};

/// Forward DP over in-neighbour lists: t[i] = boosted MAX over
/// t[j] + w(j, i), j in D'_i, for i = s+1..n. Boost 2⌈log2 n⌉ unless
/// overridden.
LongestPathRun longest_paths_quantum(const Dag& dag, Vertex source,
                                     const SimConfig& config,
                                     std::uint64_t seed);

struct ClassicalLongestPaths {
  LongestPathTable table;
  std::uint64_t queries = 0;  // one per edge read, m in total
};

ClassicalLongestPaths longest_paths_classical(const Dag& dag, Vertex source);

struct DiameterRun {
  std::int64_t diam = 0;
  DistanceMatrix distances;
  QueryLedger ledger;
};

/// Shortest distances from every non-sink by boosted MIN (2⌈log2 n⌉), then a
/// boosted MAX (⌈log2 n⌉) over 0 and every finite distance.
DiameterRun diameter_quantum(const Dag& dag, const SimConfig& config,
                             std::uint64_t seed);

struct ClassicalDiameter {
  std::int64_t diam = 0;
  std::uint64_t queries = 0;  // edges inspected by the BFS passes
};

/// BFS from every non-sink vertex.
ClassicalDiameter diameter_classical(const Dag& dag);

/// Longest path length in edges starting at `a`.
std::size_t dependency_depth(const Dag& dag, Vertex a);

}  // namespace qdag

#endif  // QDAG_PATHS_HPP

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

#include "qdag/reference.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "qdag/error.hpp"

namespace qdag {

namespace {

void enumerate(const Dag& dag, Vertex v, std::int64_t length, std::vector<Value>& best) {
  if (Value(length) > best[v - 1]) best[v - 1] = Value(length);
  const auto succ = dag.successors(v);
  const auto w = dag.weights(v);
  for (std::size_t p = 0; p < succ.size(); ++p) enumerate(dag, succ[p], length + w[p], best);
}

}  // namespace

LongestPathTable brute_force_paths(const Dag& dag, Vertex source) {
  if (dag.n() > kBruteForcePathsMaxN) {
    throw Error(ErrorCode::kTooLarge, "path enumeration is limited to n <= " +
                                          std::to_string(kBruteForcePathsMaxN));
  }
  if (source < 1 || source > dag.n()) {
    throw Error(ErrorCode::kSourceOutOfRange, "source " + std::to_string(source));
  }
  LongestPathTable out;
  out.source = source;
  out.t.assign(dag.n(), Value::neg_inf());
  enumerate(dag, source, 0, out.t);
  return out;
}

std::int64_t brute_force_diameter(const Dag& dag) {
  const std::size_t n = dag.n();
  if (n > kBruteForceDiameterMaxN) {
    throw Error(ErrorCode::kTooLarge, "all-pairs diameter is limited to n <= " +
                                          std::to_string(kBruteForceDiameterMaxN));
  }
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kNone));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : dag.edges()) d[e.from - 1][e.to - 1] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  std::int64_t diam = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] < kNone) diam = std::max(diam, d[i][j]);
    }
  }
  return diam;
}

}  // namespace qdag

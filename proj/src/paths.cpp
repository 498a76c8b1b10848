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

#include "qdag/paths.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "qdag/error.hpp"

namespace qdag {

namespace {

void check_source(const Dag& dag, Vertex s) {
  if (s < 1 || s > dag.n()) {
    throw Error(ErrorCode::kSourceOutOfRange,
                "source " + std::to_string(s) + " outside 1.." + std::to_string(dag.n()));
  }
}

}  // namespace

LongestPathRun longest_paths_quantum(const Dag& dag, Vertex source, const SimConfig& config,
                                     std::uint64_t seed) {
  config.validate();
  check_source(dag, source);
  const std::size_t n = dag.n();
  const ReverseAdjacency rev = build_reverse(dag);

  LongestPathRun run;
  run.boost = config.boost.value_or(default_boost(n));
  run.table.source = source;
  run.table.t.assign(n, Value::neg_inf());
  run.table.t[source - 1] = Value(0);
  std::vector<Value>& t = run.table.t;
  RandomStream rng(seed);

  for (Vertex i = source + 1; i <= n; ++i) {
    const auto preds = rev.predecessors(i);
    if (preds.empty()) continue;
    const auto w = rev.weights(i);
    Source<Value> candidates(preds.size(), [&t, preds, w](std::size_t p) {
      return t[preds[p - 1] - 1] + Value(w[p - 1]);
    });
    run.ledger.attribute_to(i);
    t[i - 1] = boosted_extremum(Direction::kMax, candidates, run.boost, config, rng, run.ledger,
                                QueryCategory::kWeight)
                   .value;
  }
  run.ledger.attribute_to(0);
  return run;
}

ClassicalLongestPaths longest_paths_classical(const Dag& dag, Vertex source) {
  check_source(dag, source);
  ClassicalLongestPaths out;
  out.table.source = source;
  out.table.t.assign(dag.n(), Value::neg_inf());
  out.table.t[source - 1] = Value(0);
  std::vector<Value>& t = out.table.t;
  // Index order is a topological order, so one relaxation pass suffices.
  for (Vertex v = 1; v <= dag.n(); ++v) {
    const auto succ = dag.successors(v);
    const auto w = dag.weights(v);
    for (std::size_t p = 0; p < succ.size(); ++p) {
      ++out.queries;
      if (!t[v - 1].is_finite()) continue;
      const Value via = t[v - 1] + Value(w[p]);
      if (via > t[succ[p] - 1]) t[succ[p] - 1] = via;
    }
  }
  return out;
}

DiameterRun diameter_quantum(const Dag& dag, const SimConfig& config, std::uint64_t seed) {
  config.validate();
  const std::size_t n = dag.n();
  const std::size_t n_hat = dag.n_hat();
  const ReverseAdjacency rev = build_reverse(dag);
  const std::size_t k = config.boost.value_or(default_boost(n));
  const std::size_t k_final =
      config.final_boost.value_or(std::max<std::size_t>(1, ceil_log2(std::max<std::size_t>(n, 1))));
  const RandomStream base(seed);

  DiameterRun run;
  run.distances.n = n;
  run.distances.rows.assign(n_hat, {});
  // Rows are independent: each z has its own substream and sub-ledger.
  for (std::size_t z = n_hat; z >= 1; --z) {
    std::vector<Value>& row = run.distances.rows[z - 1];
    row.assign(n, Value::pos_inf());
    row[z - 1] = Value(0);
    RandomStream rng = base.substream(z);
    QueryLedger sub;
    for (std::size_t i = z + 1; i <= n; ++i) {
      const auto preds = rev.predecessors(static_cast<Vertex>(i));
      if (preds.empty()) continue;
      Source<Value> dist(preds.size(), [&row, preds](std::size_t p) { return row[preds[p - 1] - 1]; });
      sub.attribute_to(static_cast<Vertex>(i));
      row[i - 1] = boosted_extremum(Direction::kMin, dist, k, config, rng, sub).value + Value(1);
    }
    run.ledger.merge(sub);
  }

  // Virtual concatenation (0, t^1[2..n], t^2[3..n], ..., t^n_hat[n_hat+1..n]).
  std::vector<std::size_t> row_start(n_hat + 1, 1);
  for (std::size_t z = 1; z <= n_hat; ++z) row_start[z] = row_start[z - 1] + (n - z);
  const auto& rows = run.distances.rows;
  Source<Value> all(row_start[n_hat], [&rows, &row_start, n_hat](std::size_t p) {
    if (p == 1) return Value(0);
    const auto it = std::upper_bound(row_start.begin() + 1, row_start.end(), p - 1);
    const auto z = static_cast<std::size_t>(it - row_start.begin());
    const std::size_t i = z + (p - 1 - row_start[z - 1]) + 1;
    const Value d = rows[z - 1][i - 1];
    return d.is_pos_inf() ? Value::neg_inf() : d;  // unreachable pairs are ignored
  });
  RandomStream rng = base.substream(0);
  run.ledger.attribute_to(0);
  run.diam = boosted_extremum(Direction::kMax, all, k_final, config, rng, run.ledger).value.finite();
  run.distances.diam = run.diam;
  return run;
}

ClassicalDiameter diameter_classical(const Dag& dag) {
  ClassicalDiameter out;
  const std::size_t n = dag.n();
  std::vector<std::int64_t> dist(n + 1);
  for (Vertex z = 1; z <= dag.n_hat(); ++z) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[z] = 0;
    std::deque<Vertex> frontier{z};
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop_front();
      for (Vertex v : dag.successors(u)) {
        ++out.queries;
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        out.diam = std::max(out.diam, dist[v]);
        frontier.push_back(v);
      }
    }
  }
  return out;
}

std::size_t dependency_depth(const Dag& dag, Vertex a) {
  check_source(dag, a);
  std::vector<std::size_t> depth(dag.n() + 1, 0);
  for (std::size_t v = dag.n_hat(); v >= a && v >= 1; --v) {
    for (Vertex c : dag.successors(static_cast<Vertex>(v))) {
      depth[v] = std::max(depth[v], depth[c] + 1);
    }
  }
  return depth[a];
}

}  // namespace qdag

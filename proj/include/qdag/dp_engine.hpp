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

#ifndef QDAG_DP_ENGINE_HPP
#define QDAG_DP_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qdag/dag.hpp"
#include "qdag/oracle.hpp"
#include "qdag/primitives.hpp"
#include "qdag/value.hpp"

namespace qdag {

enum class Combiner { kAnd, kOr, kNand, kMax, kMin };

std::string_view combiner_name(Combiner c);
bool is_boolean(Combiner c);

using SinkEval = std::function<Value(Vertex)>;

/// t[1..n_hat] plus the sink evaluator behind t_f.
class ValueTable {
 public:
  ValueTable(std::size_t n_hat, SinkEval sink_eval);

  std::size_t n_hat() const { return computed_.size(); }
  /// t_f(j): the computed entry for j <= n_hat, the sink value otherwise.
  Value at(Vertex j) const;
  bool written(Vertex i) const { return computed_[i - 1].has_value(); }
  /// Each entry is written once.
  void write(Vertex i, Value v);

 private:
  std::vector<std::optional<Value>> computed_;
  SinkEval sink_eval_;
};

/// Per-vertex term applied to a child's value when the parent inspects it;
/// `position` is 1-based within D_parent. Edge polarity and edge weights are
/// expressed this way.
using EdgeTerm =
    std::function<Value(Vertex parent, std::size_t position, Value child)>;

struct DpProblem {
  /// combiners[i - 1] is h_i for i = 1..n_hat.
  std::vector<std::optional<Combiner>> combiners;
  SinkEval sink_eval;
  EdgeTerm edge_term;  // identity when empty
  /// The loop runs i = n_hat ... stop_at.
  Vertex stop_at = 1;
};

struct DpResult {
  Value answer;
  ValueTable table;
  QueryLedger ledger;
  std::size_t boost = 0;
};

/// Quantum DP over a DAG: processes vertices n_hat down to `stop_at`, each by
/// a boosted primitive over its out-neighbours. AND/OR/NAND use boosted
/// search (AND and NAND look for a 0, OR for a 1), MAX/MIN boosted
/// extremum. The boost is `config.boost` or 2⌈log2 n_hat⌉.
DpResult run_dp(const Dag& dag, const DpProblem& problem,
                const SimConfig& config, std::uint64_t seed);

/// The same recursion evaluated classically in descending index order.
/// Shares no code with run_dp's primitive path.
std::vector<Value> classical_dp(const Dag& dag, const DpProblem& problem);

}  // namespace qdag

#endif  // QDAG_DP_ENGINE_HPP

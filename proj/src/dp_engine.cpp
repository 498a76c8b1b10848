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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "qdag/error.hpp"

namespace qdag {

std::string_view combiner_name(Combiner c) {
  switch (c) {
    case Combiner::kAnd: return "and";
    case Combiner::kOr: return "or";
    case Combiner::kNand: return "nand";
    case Combiner::kMax: return "max";
    case Combiner::kMin: return "min";
  }
  return "unknown";
}

bool is_boolean(Combiner c) {
  return c == Combiner::kAnd || c == Combiner::kOr || c == Combiner::kNand;
}

ValueTable::ValueTable(std::size_t n_hat, SinkEval sink_eval)
    : computed_(n_hat), sink_eval_(std::move(sink_eval)) {}

Value ValueTable::at(Vertex j) const {
  if (j <= computed_.size()) {
    if (!computed_[j - 1]) {
      throw std::logic_error("t[" + std::to_string(j) + "] read before it was written");
    }
    return *computed_[j - 1];
  }
  return sink_eval_(j);
}

void ValueTable::write(Vertex i, Value v) {
  if (computed_[i - 1]) {
    throw std::logic_error("t[" + std::to_string(i) + "] written twice");
  }
  computed_[i - 1] = v;
}

namespace {

Combiner combiner_of(const DpProblem& problem, Vertex i) {
  if (i > problem.combiners.size() || !problem.combiners[i - 1]) {
    throw Error(ErrorCode::kMissingCombiner,
                "vertex " + std::to_string(i) + " has children but no combiner");
  }
  return *problem.combiners[i - 1];
}

Value apply_edge(const DpProblem& problem, Vertex parent, std::size_t position,
                 Value child) {
  return problem.edge_term ? problem.edge_term(parent, position, child) : child;
}

}  // namespace

DpResult run_dp(const Dag& dag, const DpProblem& problem, const SimConfig& config,
                std::uint64_t seed) {
  config.validate();
  const std::size_t n_hat = dag.n_hat();
  DpResult result{Value(), ValueTable(n_hat, problem.sink_eval), QueryLedger(),
                  config.boost.value_or(default_boost(n_hat))};
  RandomStream rng(seed);
  ValueTable& table = result.table;

  for (std::size_t i = n_hat; i >= std::max<std::size_t>(problem.stop_at, 1); --i) {
    const auto v = static_cast<Vertex>(i);
    const Combiner h = combiner_of(problem, v);
    const auto children = dag.successors(v);
    result.ledger.attribute_to(v);

    // One query covers the child index, its stored value and the edge
    // attribute.
    Value out;
    if (is_boolean(h)) {
      const std::int64_t wanted = h == Combiner::kOr ? 1 : 0;
      Source<bool> marked(children.size(), [&, v, wanted](std::size_t p) {
        Value x = apply_edge(problem, v, p, table.at(children[p - 1]));
        if (!x.is_bit()) {
          throw Error(ErrorCode::kTypeMismatch,
                      "vertex " + std::to_string(v) + " combines non-bit value " +
                          x.to_string());
        }
        return x.finite() == wanted;
      });
      SearchOutcome s = boosted_search_aa(marked, result.boost, config, rng, result.ledger);
      switch (h) {
        case Combiner::kAnd: out = Value::bit(!s.found); break;
        case Combiner::kOr: out = Value::bit(s.found.has_value()); break;
        case Combiner::kNand: out = Value::bit(s.found.has_value()); break;
        default: break;
      }
    } else {
      Source<Value> inputs(children.size(), [&, v](std::size_t p) {
        return apply_edge(problem, v, p, table.at(children[p - 1]));
      });
      const Direction dir = h == Combiner::kMax ? Direction::kMax : Direction::kMin;
      out = boosted_extremum(dir, inputs, result.boost, config, rng, result.ledger).value;
    }
    table.write(v, out);
    if (i == 1) break;
  }
  result.ledger.attribute_to(0);

  const Vertex answer_at = std::max<Vertex>(problem.stop_at, 1);
  result.answer = answer_at <= dag.n() ? table.at(answer_at) : Value();
  return result;
}

std::vector<Value> classical_dp(const Dag& dag, const DpProblem& problem) {
  const std::size_t n = dag.n();
  std::vector<Value> t(n);
  for (std::size_t j = n; j > dag.n_hat(); --j) t[j - 1] = problem.sink_eval(static_cast<Vertex>(j));
  for (std::size_t i = dag.n_hat(); i >= 1; --i) {
    const auto v = static_cast<Vertex>(i);
    const Combiner h = combiner_of(problem, v);
    const auto children = dag.successors(v);
    std::vector<Value> xs;
    xs.reserve(children.size());
    for (std::size_t p = 0; p < children.size(); ++p) {
      xs.push_back(apply_edge(problem, v, p + 1, t[children[p] - 1]));
    }
    Value acc;
    switch (h) {
      case Combiner::kAnd:
      case Combiner::kNand: {
        bool all = std::all_of(xs.begin(), xs.end(), [](Value x) { return x == Value(1); });
        acc = Value::bit(h == Combiner::kAnd ? all : !all);
        break;
      }
      case Combiner::kOr:
        acc = Value::bit(std::any_of(xs.begin(), xs.end(), [](Value x) { return x == Value(1); }));
        break;
      case Combiner::kMax:
        acc = *std::max_element(xs.begin(), xs.end());
        break;
      case Combiner::kMin:
        acc = *std::min_element(xs.begin(), xs.end());
        break;
    }
    t[i - 1] = acc;
  }
  return t;
}

}  // namespace qdag

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

#include "qdag/circuit.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include "qdag/dp_engine.hpp"
#include "qdag/error.hpp"
#include "text_lines.hpp"

namespace qdag {

std::string_view gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::kAnd: return "AND";
    case GateKind::kOr: return "OR";
    case GateKind::kNand: return "NAND";
    case GateKind::kXor: return "XOR";
    case GateKind::kVar: return "VAR";
  }
  return "?";
}

bool CircuitDag::has_xor() const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.kind == GateKind::kXor; });
}

std::vector<std::string> CircuitDag::variables() const {
  std::set<std::string> names;
  for (const Gate& g : gates_) {
    if (g.kind == GateKind::kVar) names.insert(g.var);
  }
  return {names.begin(), names.end()};
}

RawCircuit CircuitDag::to_raw() const {
  RawCircuit raw;
  raw.n = dag_.n();
  raw.gates = gates_;
  raw.edges = dag_.edges();
  raw.polarity.assign(polarity_.begin(), polarity_.end());
  raw.root = root_;
  raw.output_negated = output_negated_;
  return raw;
}

namespace detail {

struct CircuitFactory {
  static CircuitDag make(Dag dag, const RawCircuit& raw) {
    CircuitDag c;
    c.dag_ = std::move(dag);
    c.gates_ = raw.gates;
    c.root_ = raw.root;
    c.output_negated_ = raw.output_negated;
    c.polarity_.assign(raw.edges.size(), 1);
    // Same slot assignment as validate_dag: per source, in input order.
    std::vector<std::size_t> fill(raw.n + 1, 0);
    for (std::size_t e = 0; e < raw.edges.size(); ++e) {
      const Vertex from = raw.edges[e].from;
      c.polarity_[c.dag_.edge_id(from, fill[from]++)] = static_cast<std::uint8_t>(raw.polarity[e]);
    }
    return c;
  }
};

}  // namespace detail

namespace {

// Source lines of the `v`/`e` records, when validating a parsed file.
struct Locator {
  std::vector<std::size_t> vertex_line;  // by vertex - 1
  std::vector<std::size_t> edge_line;    // by raw edge index
  std::size_t header_line = 0;
};

[[noreturn]] void fail(ErrorCode code, const std::string& msg, std::size_t line) {
  if (line == 0) throw Error(code, msg);
  throw Error(code, msg, Error::PositionKind::kLine, line);
}

CircuitDag validate_located(const RawCircuit& raw, const Locator& where) {
  auto vline = [&](Vertex v) {
    return v >= 1 && v <= where.vertex_line.size() ? where.vertex_line[v - 1] : 0;
  };
  auto eline = [&](std::size_t e) {
    return e < where.edge_line.size() ? where.edge_line[e] : 0;
  };
  const std::size_t n = raw.n;
  if (raw.gates.size() != n) {
    fail(ErrorCode::kFormatError, "expected " + std::to_string(n) + " gate labels",
         where.header_line);
  }
  if (raw.polarity.size() != raw.edges.size()) {
    fail(ErrorCode::kMissingPolarity, "every edge needs a polarity", where.header_line);
  }

  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<std::size_t> degree(n + 1, 0);
  for (std::size_t e = 0; e < raw.edges.size(); ++e) {
    const Edge& edge = raw.edges[e];
    const std::string name = "edge (" + std::to_string(edge.from) + "," +
                             std::to_string(edge.to) + ")";
    if (edge.from < 1 || edge.from > n || edge.to < 1 || edge.to > n) {
      fail(ErrorCode::kIndexOutOfRange, name + " outside 1.." + std::to_string(n), eline(e));
    }
    if (edge.from >= edge.to) {
      fail(ErrorCode::kEdgeNotForward, name + " does not point to a higher index", eline(e));
    }
    if (!seen.emplace(edge.from, edge.to).second) {
      fail(ErrorCode::kDuplicateEdge, name + " appears twice", eline(e));
    }
    if (raw.polarity[e] != 0 && raw.polarity[e] != 1) {
      fail(ErrorCode::kMissingPolarity, name + " polarity must be 0 or 1", eline(e));
    }
    ++degree[edge.from];
  }

  for (Vertex v = 1; v <= n; ++v) {
    const Gate& g = raw.gates[v - 1];
    const std::string name = "vertex " + std::to_string(v);
    if (g.kind == GateKind::kVar) {
      if (degree[v] > 0) fail(ErrorCode::kVarWithChildren, name + " is a variable with children", vline(v));
      if (g.var.empty()) fail(ErrorCode::kFormatError, name + " has no variable name", vline(v));
      continue;
    }
    if (degree[v] == 0) {
      fail(ErrorCode::kGateWithoutInputs, name + " is a " + std::string(gate_kind_name(g.kind)) +
                                              " gate without inputs", vline(v));
    }
    if (g.kind == GateKind::kXor && degree[v] != 2) {
      fail(ErrorCode::kNonBinaryXor, name + " is an XOR with " + std::to_string(degree[v]) +
                                         " inputs; only binary XOR is supported", vline(v));
    }
    if (degree[v] == 1) fail(ErrorCode::kFanoutOne, name + " has a single input", vline(v));
  }

  Dag dag;
  try {
    dag = validate_dag(n, raw.edges, false);
  } catch (const Error& err) {
    // Only the sink-suffix rule is left unchecked here.
    Vertex first_sink = 1;
    while (first_sink <= n && degree[first_sink] > 0) ++first_sink;
    std::string msg = err.what();
    fail(err.code(), msg.substr(msg.find(": ") + 2), vline(first_sink));
  }

  const Vertex s = raw.root;
  if (s < 1 || s > n) {
    fail(ErrorCode::kIndexOutOfRange, "root " + std::to_string(s) + " is not a vertex",
         where.header_line);
  }
  if (dag.n_hat() > 0 && s > dag.n_hat()) {
    fail(ErrorCode::kInvalidParams, "root " + std::to_string(s) + " is a variable vertex",
         vline(s));
  }
  for (std::size_t e = 0; e < raw.edges.size(); ++e) {
    if (raw.edges[e].to == s) {
      fail(ErrorCode::kRootHasParent, "root " + std::to_string(s) + " has an incoming edge",
           eline(e));
    }
  }

  return detail::CircuitFactory::make(std::move(dag), raw);
}

std::vector<std::uint8_t> bind_inputs(const CircuitDag& circuit, const Assignment& assignment) {
  const Dag& dag = circuit.dag();
  std::vector<std::uint8_t> bits(dag.n() + 1, 0);
  for (Vertex v = static_cast<Vertex>(dag.n_hat() + 1); v <= dag.n(); ++v) {
    const std::string& name = circuit.gate(v).var;
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      throw Error(ErrorCode::kMissingVariable, "no value for variable '" + name + "'");
    }
    bits[v] = it->second ? 1 : 0;
  }
  return bits;
}

}  // namespace

CircuitDag validate_circuit(const RawCircuit& raw) { return validate_located(raw, Locator{}); }

bool eval_circuit_classical(const CircuitDag& circuit, const Assignment& assignment) {
  const Dag& dag = circuit.dag();
  std::vector<std::uint8_t> r = bind_inputs(circuit, assignment);
  for (std::size_t i = dag.n_hat(); i >= circuit.root() && i >= 1; --i) {
    const auto v = static_cast<Vertex>(i);
    const auto children = dag.successors(v);
    const GateKind kind = circuit.gate(v).kind;
    bool all = true, any = false, parity = false;
    for (std::size_t p = 0; p < children.size(); ++p) {
      const bool x = (r[children[p]] != 0) == circuit.polarity(v, p);
      all = all && x;
      any = any || x;
      parity = parity != x;
    }
    bool out = false;
    switch (kind) {
      case GateKind::kAnd: out = all; break;
      case GateKind::kOr: out = any; break;
      case GateKind::kNand: out = !all; break;
      case GateKind::kXor: out = parity; break;
      case GateKind::kVar: throw std::logic_error("variable vertex inside the function range");
    }
    r[v] = out ? 1 : 0;
  }
  return (r[circuit.root()] != 0) != circuit.output_negated();
}

CircuitRun eval_circuit_quantum(const CircuitDag& circuit, const Assignment& assignment,
                                const SimConfig& config, std::uint64_t seed) {
  if (circuit.has_xor()) {
    throw Error(ErrorCode::kXorPresent, "rewrite XOR gates before quantum evaluation");
  }
  const Dag& dag = circuit.dag();
  const std::vector<std::uint8_t> bits = bind_inputs(circuit, assignment);

  DpProblem problem;
  problem.combiners.resize(dag.n_hat());
  for (Vertex v = 1; v <= dag.n_hat(); ++v) {
    switch (circuit.gate(v).kind) {
      case GateKind::kAnd: problem.combiners[v - 1] = Combiner::kAnd; break;
      case GateKind::kOr: problem.combiners[v - 1] = Combiner::kOr; break;
      case GateKind::kNand: problem.combiners[v - 1] = Combiner::kNand; break;
      default: break;
    }
  }
  problem.sink_eval = [&bits](Vertex v) { return Value::bit(bits[v] != 0); };
  problem.edge_term = [&circuit](Vertex parent, std::size_t position, Value child) {
    return circuit.polarity(parent, position - 1) ? child : Value::bit(child == Value(0));
  };
  problem.stop_at = circuit.root();

  DpResult dp = run_dp(dag, problem, config, seed);
  CircuitRun run;
  run.value = (dp.answer == Value(1)) != circuit.output_negated();
  run.ledger = std::move(dp.ledger);
  run.boost = dp.boost;
  return run;
}

CircuitDag rewrite_xor(const CircuitDag& circuit) {
  if (!circuit.has_xor()) return circuit;
  const Dag& dag = circuit.dag();
  const std::size_t n = dag.n();

  std::vector<Vertex> renumber(n + 1, 0);
  Vertex next = 1;
  for (Vertex v = 1; v <= n; ++v) {
    renumber[v] = next;
    next += circuit.gate(v).kind == GateKind::kXor ? 3 : 1;
  }

  RawCircuit out;
  out.n = next - 1;
  out.gates.resize(out.n);
  out.root = renumber[circuit.root()];
  out.output_negated = circuit.output_negated();
  auto add = [&out](Vertex from, Vertex to, bool pol) {
    out.edges.push_back({from, to, 0});
    out.polarity.push_back(pol ? 1 : 0);
  };

  for (Vertex v = 1; v <= n; ++v) {
    const Gate& g = circuit.gate(v);
    const Vertex nv = renumber[v];
    const auto children = dag.successors(v);
    if (g.kind != GateKind::kXor) {
      out.gates[nv - 1] = g;
      for (std::size_t p = 0; p < children.size(); ++p) {
        add(nv, renumber[children[p]], circuit.polarity(v, p));
      }
      continue;
    }
    if (children.size() != 2) {
      throw Error(ErrorCode::kNonBinaryXor, "vertex " + std::to_string(v) + " is not a binary XOR");
    }
    // a ⊕ b = (a ∧ ¬b) ∨ (¬a ∧ b)
    const Vertex a = renumber[children[0]], b = renumber[children[1]];
    const bool pa = circuit.polarity(v, 0), pb = circuit.polarity(v, 1);
    out.gates[nv - 1] = {GateKind::kOr, {}};
    out.gates[nv] = {GateKind::kAnd, {}};
    out.gates[nv + 1] = {GateKind::kAnd, {}};
    add(nv, nv + 1, true);
    add(nv, nv + 2, true);
    add(nv + 1, a, pa);
    add(nv + 1, b, !pb);
    add(nv + 2, a, !pa);
    add(nv + 2, b, pb);
  }
  return validate_circuit(out);
}

CircuitDag gen_random_circuit(std::size_t functions, std::size_t vars, std::size_t max_fanin,
                              const std::vector<GateKind>& kinds, std::uint64_t seed) {
  if (functions < 1 || vars < 2 || max_fanin < 2 || kinds.empty() ||
      std::count(kinds.begin(), kinds.end(), GateKind::kVar) > 0) {
    throw Error(ErrorCode::kInvalidParams,
                "random circuit needs >= 1 function, >= 2 variables, fan-in >= 2 and "
                "non-variable gate kinds");
  }
  RandomStream rng(seed);
  RawCircuit raw;
  raw.n = functions + vars;
  raw.gates.resize(raw.n);
  for (std::size_t v = 1; v <= raw.n; ++v) {
    if (v <= functions) {
      raw.gates[v - 1] = {kinds[rng.uniform(kinds.size())], {}};
    } else {
      raw.gates[v - 1] = {GateKind::kVar, "x" + std::to_string(v - functions)};
    }
  }
  for (std::size_t v = 1; v <= functions; ++v) {
    const std::size_t available = raw.n - v;
    const std::size_t cap = std::min(max_fanin, available);
    const std::size_t fanin =
        raw.gates[v - 1].kind == GateKind::kXor ? 2 : 2 + rng.uniform(cap - 1);
    std::set<Vertex> children;
    // Taking v + 1 half of the time keeps long dependency chains.
    if (rng.bernoulli(0.5)) children.insert(static_cast<Vertex>(v + 1));
    while (children.size() < fanin) {
      children.insert(static_cast<Vertex>(v + 1 + rng.uniform(available)));
    }
    for (Vertex c : children) {
      raw.edges.push_back({static_cast<Vertex>(v), c, 0});
      raw.polarity.push_back(rng.bernoulli(0.5) ? 1 : 0);
    }
  }
  return validate_circuit(raw);
}

CircuitDag parse_circuit(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::kFormatError, "missing 'circuit <n> <m>' header",
                Error::PositionKind::kLine, 1);
  }
  const detail::Line& head = lines.front();
  if (head.tokens[0] != "circuit" || head.tokens.size() < 3 || head.tokens.size() > 4) {
    detail::fail_at(head, "expected 'circuit <n> <m> [negated]'");
  }
  RawCircuit raw;
  Locator where;
  where.header_line = head.number;
  raw.n = detail::parse_int<std::size_t>(head, head.tokens[1], "vertex count");
  const auto m = detail::parse_int<std::size_t>(head, head.tokens[2], "edge count");
  if (head.tokens.size() == 4) {
    if (head.tokens[3] != "negated") detail::fail_at(head, "unknown header flag");
    raw.output_negated = true;
  }
  if (raw.n > std::numeric_limits<Vertex>::max()) detail::fail_at(head, "vertex count too large");
  if (lines.size() - 1 != raw.n + m) {
    const auto& at = lines.size() - 1 > raw.n + m ? lines[raw.n + m + 1] : lines.back();
    detail::fail_at(at, "header declares " + std::to_string(raw.n) + " vertices and " +
                            std::to_string(m) + " edges, found " +
                            std::to_string(lines.size() - 1) + " records");
  }

  raw.gates.resize(raw.n);
  where.vertex_line.assign(raw.n, 0);
  for (std::size_t r = 1; r <= raw.n; ++r) {
    const auto& line = lines[r];
    if (line.tokens[0] != "v" || line.tokens.size() < 3) {
      detail::fail_at(line, "expected 'v <i> AND|OR|NAND|XOR' or 'v <i> VAR <name>'");
    }
    const auto v = detail::parse_int<std::size_t>(line, line.tokens[1], "vertex");
    if (v < 1 || v > raw.n) {
      detail::fail_at(line, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(raw.n),
                      ErrorCode::kIndexOutOfRange);
    }
    if (where.vertex_line[v - 1] != 0) detail::fail_at(line, "vertex labelled twice");
    where.vertex_line[v - 1] = line.number;
    const std::string_view kind = line.tokens[2];
    Gate g;
    if (kind == "VAR") {
      if (line.tokens.size() != 4) detail::fail_at(line, "VAR needs exactly one name");
      g = {GateKind::kVar, std::string(line.tokens[3])};
    } else {
      if (line.tokens.size() != 3) detail::fail_at(line, "unexpected token after gate kind");
      if (kind == "AND") g.kind = GateKind::kAnd;
      else if (kind == "OR") g.kind = GateKind::kOr;
      else if (kind == "NAND") g.kind = GateKind::kNand;
      else if (kind == "XOR") g.kind = GateKind::kXor;
      else detail::fail_at(line, "unknown gate kind '" + std::string(kind) + "'");
    }
    raw.gates[v - 1] = std::move(g);
  }
  for (std::size_t r = raw.n + 1; r < lines.size(); ++r) {
    const auto& line = lines[r];
    if (line.tokens[0] != "e") detail::fail_at(line, "expected 'e <u> <v> <pol>'");
    if (line.tokens.size() != 4) {
      detail::fail_at(line, "expected 'e <u> <v> <pol>'",
                      line.tokens.size() == 3 ? ErrorCode::kMissingPolarity : ErrorCode::kFormatError);
    }
    Edge e;
    e.from = detail::parse_int<Vertex>(line, line.tokens[1], "vertex");
    e.to = detail::parse_int<Vertex>(line, line.tokens[2], "vertex");
    raw.edges.push_back(e);
    raw.polarity.push_back(detail::parse_int<int>(line, line.tokens[3], "polarity"));
    where.edge_line.push_back(line.number);
  }
  return validate_located(raw, where);
}

CircuitDag read_circuit_file(const std::string& path) {
  return parse_circuit(detail::read_file(path));
}

void write_circuit(std::ostream& os, const CircuitDag& circuit) {
  if (circuit.root() != 1) {
    throw Error(ErrorCode::kInvalidParams, "the .circ format stores root 1 only");
  }
  const Dag& dag = circuit.dag();
  os << "circuit " << dag.n() << ' ' << dag.m();
  if (circuit.output_negated()) os << " negated";
  os << '\n';
  for (Vertex v = 1; v <= dag.n(); ++v) {
    const Gate& g = circuit.gate(v);
    os << "v " << v << ' ' << gate_kind_name(g.kind);
    if (g.kind == GateKind::kVar) os << ' ' << g.var;
    os << '\n';
  }
  for (Vertex v = 1; v <= dag.n(); ++v) {
    const auto succ = dag.successors(v);
    for (std::size_t p = 0; p < succ.size(); ++p) {
      os << "e " << v << ' ' << succ[p] << ' ' << (circuit.polarity(v, p) ? 1 : 0) << '\n';
    }
  }
}

}  // namespace qdag

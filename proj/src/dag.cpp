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

#include "qdag/dag.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "qdag/error.hpp"
#include "qdag/oracle.hpp"
#include "text_lines.hpp"

namespace qdag {

std::vector<Edge> Dag::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex v = 1; v <= n(); ++v) {
    auto succ = successors(v);
    auto w = weights(v);
    for (std::size_t p = 0; p < succ.size(); ++p) out.push_back({v, succ[p], w[p]});
  }
  return out;
}

Dag validate_dag(std::size_t n, std::span<const Edge> edges, bool weighted) {
  std::vector<std::size_t> degree(n + 1, 0);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges) {
    if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                      ") outside 1.." + std::to_string(n));
    }
    if (e.from >= e.to) {
      throw Error(ErrorCode::kEdgeNotForward,
                  "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                      ") does not point to a higher index");
    }
    if (!seen.emplace(e.from, e.to).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                      ") appears twice");
    }
    ++degree[e.from];
  }

  std::size_t n_hat = 0;
  while (n_hat < n && degree[n_hat + 1] > 0) ++n_hat;
  for (std::size_t v = n_hat + 1; v <= n; ++v) {
    if (degree[v] > 0) {
      throw Error(ErrorCode::kSinkOrderViolation,
                  "sink " + std::to_string(n_hat + 1) +
                      " precedes non-sink " + std::to_string(v));
    }
  }

  Dag dag;
  dag.n_hat_ = n_hat;
  dag.weighted_ = weighted;
  dag.offsets_.assign(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) dag.offsets_[v] = dag.offsets_[v - 1] + degree[v];
  dag.targets_.resize(edges.size());
  dag.weights_.assign(edges.size(), 0);
  std::vector<std::size_t> fill(dag.offsets_.begin(), dag.offsets_.end() - (n > 0 ? 1 : 0));
  for (const Edge& e : edges) {
    std::size_t slot = fill[e.from - 1]++;
    dag.targets_[slot] = e.to;
    if (weighted) dag.weights_[slot] = e.weight;
  }
  return dag;
}

ReverseAdjacency build_reverse(const Dag& dag) {
  const std::size_t n = dag.n();
  ReverseAdjacency rev;
  std::vector<std::size_t> degree(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex u : dag.successors(v)) ++degree[u];
  }
  rev.offsets_.assign(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) rev.offsets_[v] = rev.offsets_[v - 1] + degree[v];
  rev.sources_.resize(dag.m());
  rev.weights_.resize(dag.m());
  std::vector<std::size_t> fill(rev.offsets_.begin(), rev.offsets_.end() - (n > 0 ? 1 : 0));
  // Visiting sources in ascending order keeps each D'_i sorted.
  for (Vertex v = 1; v <= n; ++v) {
    auto succ = dag.successors(v);
    auto w = dag.weights(v);
    for (std::size_t p = 0; p < succ.size(); ++p) {
      std::size_t slot = fill[succ[p] - 1]++;
      rev.sources_[slot] = v;
      rev.weights_[slot] = w[p];
    }
  }
  return rev;
}

Dag gen_layered(std::size_t layers, std::size_t width, double density,
                std::optional<WeightRange> weights, std::uint64_t seed) {
  if (layers < 2 || width < 1 || !(density >= 0.0 && density <= 1.0) ||
      (weights && weights->lo > weights->hi)) {
    throw Error(ErrorCode::kInvalidParams,
                "layered generator needs layers >= 2, width >= 1, density in "
                "[0,1] and lo <= hi");
  }
  RandomStream rng(seed);
  auto draw_weight = [&]() -> Weight {
    if (!weights) return 0;
    auto span = static_cast<std::uint64_t>(weights->hi - weights->lo) + 1;
    return weights->lo + static_cast<Weight>(span == 0 ? rng.next_u64() : rng.uniform(span));
  };
  auto index = [width](std::size_t layer, std::size_t pos) {
    return static_cast<Vertex>(layer * width + pos + 1);
  };
  std::vector<Edge> edges;
  for (std::size_t layer = 0; layer + 1 < layers; ++layer) {
    for (std::size_t p = 0; p < width; ++p) {
      bool any = false;
      for (std::size_t q = 0; q < width; ++q) {
        if (rng.bernoulli(density)) {
          edges.push_back({index(layer, p), index(layer + 1, q), draw_weight()});
          any = true;
        }
      }
      if (!any) {
        edges.push_back({index(layer, p), index(layer + 1, rng.uniform(width)), draw_weight()});
      }
    }
  }
  return validate_dag(layers * width, edges, weights.has_value());
}

Dag parse_dag(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::kFormatError, "missing 'dag <n> <m>' header",
                Error::PositionKind::kLine, 1);
  }
  const detail::Line& head = lines.front();
  bool weighted;
  if (head.tokens[0] == "dag") {
    weighted = true;
  } else if (head.tokens[0] == "dag-unweighted") {
    weighted = false;
  } else {
    detail::fail_at(head, "expected 'dag' or 'dag-unweighted' header");
  }
  if (head.tokens.size() != 3) detail::fail_at(head, "header needs exactly <n> <m>");
  auto n = detail::parse_int<std::size_t>(head, head.tokens[1], "vertex count");
  auto m = detail::parse_int<std::size_t>(head, head.tokens[2], "edge count");
  if (n > std::numeric_limits<Vertex>::max()) detail::fail_at(head, "vertex count too large");
  if (lines.size() - 1 != m) {
    const auto& where = lines.size() - 1 > m ? lines[m + 1] : lines.back();
    detail::fail_at(where, "header declares " + std::to_string(m) + " edges, found " +
                               std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  const std::size_t arity = weighted ? 4 : 3;
  for (std::size_t e = 1; e < lines.size(); ++e) {
    const auto& line = lines[e];
    if (line.tokens[0] != "e" || line.tokens.size() != arity) {
      detail::fail_at(line, weighted ? "expected 'e <u> <v> <w>'" : "expected 'e <u> <v>'");
    }
    Edge edge;
    edge.from = detail::parse_int<Vertex>(line, line.tokens[1], "vertex");
    edge.to = detail::parse_int<Vertex>(line, line.tokens[2], "vertex");
    if (weighted) edge.weight = detail::parse_int<Weight>(line, line.tokens[3], "weight");
    edges.push_back(edge);
  }
  try {
    return validate_dag(n, edges, weighted);
  } catch (const Error& err) {
    // Point at the first offending edge line when there is one.
    Vertex first_sink = 1;
    if (err.code() == ErrorCode::kSinkOrderViolation) {
      std::vector<bool> has_out(n + 2, false);
      for (const Edge& edge : edges) has_out[edge.from] = true;
      while (has_out[first_sink]) ++first_sink;
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge& edge = edges[e];
      bool bad = edge.from < 1 || edge.from > n || edge.to < 1 || edge.to > n ||
                 edge.from >= edge.to;
      if (!bad && err.code() == ErrorCode::kDuplicateEdge) {
        bad = std::find_if(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(e),
                           [&](const Edge& o) { return o.from == edge.from && o.to == edge.to; }) !=
              edges.begin() + static_cast<std::ptrdiff_t>(e);
      }
      if (!bad && err.code() == ErrorCode::kSinkOrderViolation) bad = edge.from > first_sink;
      if (bad) {
        std::string msg = err.what();
        throw Error(err.code(), msg.substr(msg.find(": ") + 2), Error::PositionKind::kLine,
                    lines[e + 1].number);
      }
    }
    std::string msg = err.what();
    throw Error(err.code(), msg.substr(msg.find(": ") + 2), Error::PositionKind::kLine,
                head.number);
  }
}

Dag read_dag_file(const std::string& path) { return parse_dag(detail::read_file(path)); }

void write_dag(std::ostream& os, const Dag& dag) {
  os << (dag.weighted() ? "dag " : "dag-unweighted ") << dag.n() << ' ' << dag.m() << '\n';
  for (const Edge& e : dag.edges()) {
    os << "e " << e.from << ' ' << e.to;
    if (dag.weighted()) os << ' ' << e.weight;
    os << '\n';
  }
}

namespace detail {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

}  // namespace qdag

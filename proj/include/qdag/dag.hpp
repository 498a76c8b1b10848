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

#ifndef QDAG_DAG_HPP
#define QDAG_DAG_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdag {

/// 1-based vertex index. 0 is never a valid vertex.
using Vertex = std::uint32_t;
using Weight = std::int64_t;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Index-topologically sorted DAG in compressed adjacency form.
///
/// Invariants, checked by `validate_dag` and preserved by every constructor:
///  * every edge (i, j) has i < j;
///  * vertices 1..n_hat have out-degree >= 1, vertices n_hat+1..n are sinks;
///  * no parallel edges.
/// Out-neighbour lists keep the order in which edges were supplied.
class Dag {
 public:
  Dag() = default;

  std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const { return targets_.size(); }
  std::size_t n_hat() const { return n_hat_; }
  std::size_t sink_count() const { return n() - n_hat_; }
  bool weighted() const { return weighted_; }

  bool is_sink(Vertex v) const { return v > n_hat_; }
  std::size_t out_degree(Vertex v) const {
    return offsets_[v] - offsets_[v - 1];
  }
  std::span<const Vertex> successors(Vertex v) const {
    return {targets_.data() + offsets_[v - 1], out_degree(v)};
  }
  /// Edge weights aligned with `successors(v)`; all zero when unweighted.
  std::span<const Weight> weights(Vertex v) const {
    return {weights_.data() + offsets_[v - 1], out_degree(v)};
  }
  /// Position of edge (v, successors(v)[p]) in the global edge numbering,
  /// p 0-based. Edge attributes stored outside the Dag key off this.
  std::size_t edge_id(Vertex v, std::size_t p) const {
    return offsets_[v - 1] + p;
  }

  std::vector<Edge> edges() const;

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  friend Dag validate_dag(std::size_t n, std::span<const Edge> edges,
                          bool weighted);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Weight> weights_;
  std::size_t n_hat_ = 0;
  bool weighted_ = false;
};

/// Builds a Dag from an edge list, rejecting anything that breaks the index
/// order or sink-suffix rules. Edge weights are ignored unless `weighted`.
Dag validate_dag(std::size_t n, std::span<const Edge> edges,
                 bool weighted = false);

/// In-neighbour lists D'_i, sorted by source index, carrying edge weights.
class ReverseAdjacency {
 public:
  std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const { return sources_.size(); }
  std::size_t in_degree(Vertex v) const {
    return offsets_[v] - offsets_[v - 1];
  }
  std::span<const Vertex> predecessors(Vertex v) const {
    return {sources_.data() + offsets_[v - 1], in_degree(v)};
  }
  std::span<const Weight> weights(Vertex v) const {
    return {weights_.data() + offsets_[v - 1], in_degree(v)};
  }

 private:
  friend ReverseAdjacency build_reverse(const Dag& dag);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> sources_;
  std::vector<Weight> weights_;
};

ReverseAdjacency build_reverse(const Dag& dag);

struct WeightRange {
  Weight lo = 1;
  Weight hi = 1;
};

/// Layered random DAG: `layers` layers of `width` vertices, edges only between
/// consecutive layers, each present with probability `density`. Every vertex
/// outside the last layer gets at least one out-edge. Weighted iff `weights`
/// is set, with weights uniform in [lo, hi].
Dag gen_layered(std::size_t layers, std::size_t width, double density,
                std::optional<WeightRange> weights, std::uint64_t seed);

// `.dag` text format.
Dag parse_dag(std::string_view text);
Dag read_dag_file(const std::string& path);
void write_dag(std::ostream& os, const Dag& dag);

}  // namespace qdag

#endif  // QDAG_DAG_HPP

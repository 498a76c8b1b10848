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

#ifndef QDAG_CIRCUIT_HPP
#define QDAG_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qdag/dag.hpp"
#include "qdag/oracle.hpp"
#include "qdag/primitives.hpp"

namespace qdag {

enum class GateKind { kAnd, kOr, kNand, kXor, kVar };

std::string_view gate_kind_name(GateKind k);

struct Gate {
  GateKind kind = GateKind::kVar;
  std::string var;  // set only for kVar

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Unvalidated circuit description. `polarity[e]` belongs to the e-th edge of
/// `edges`; 1 passes the child's value through, 0 negates it.
struct RawCircuit {
  std::size_t n = 0;
  std::vector<Gate> gates;  // gates[i - 1] labels vertex i
  std::vector<Edge> edges;
  std::vector<int> polarity;
  Vertex root = 1;
  bool output_negated = false;
};

namespace detail {
struct CircuitFactory;
}  // namespace detail

/// Boolean circuit over a Dag: variables sit on the sinks, every function
/// vertex has fan-in of at least two, and every edge carries a polarity.
class CircuitDag {
 public:
  const Dag& dag() const { return dag_; }
  const Gate& gate(Vertex v) const { return gates_[v - 1]; }
  /// Polarity of edge (v, successors(v)[p]), p 0-based.
  bool polarity(Vertex v, std::size_t p) const {
    return polarity_[dag_.edge_id(v, p)] != 0;
  }
  Vertex root() const { return root_; }
  bool output_negated() const { return output_negated_; }
  bool has_xor() const;
  std::size_t function_vertex_count() const { return dag_.n_hat(); }
  /// Distinct variable names, sorted.
  std::vector<std::string> variables() const;

  RawCircuit to_raw() const;

  friend bool operator==(const CircuitDag&, const CircuitDag&) = default;

 private:
  friend struct detail::CircuitFactory;

  Dag dag_;
  std::vector<Gate> gates_;
  std::vector<std::uint8_t> polarity_;
  Vertex root_ = 1;
  bool output_negated_ = false;
};

/// Checks every structural rule; XOR vertices must have exactly two inputs.
CircuitDag validate_circuit(const RawCircuit& raw);

using Assignment = std::map<std::string, bool, std::less<>>;

/// Reference bottom-up evaluation (native XOR). Throws MissingVariable when
/// the assignment does not cover a variable.
bool eval_circuit_classical(const CircuitDag& circuit,
                            const Assignment& assignment);

struct CircuitRun {
  bool value = false;
  QueryLedger ledger;
  std::size_t boost = 0;
};

/// Quantum-simulated evaluation (no XOR allowed): processes vertices n_hat
/// down to the root with boosted search, k = 2⌈log2 n_hat⌉ unless overridden.
CircuitRun eval_circuit_quantum(const CircuitDag& circuit,
                                const Assignment& assignment,
                                const SimConfig& config, std::uint64_t seed);

/// Replaces each binary XOR with OR(AND(a, ¬b), AND(¬a, b)) and re-indexes.
CircuitDag rewrite_xor(const CircuitDag& circuit);

/// Random circuit for tests and benchmarks: `functions` function vertices
/// drawn uniformly from `kinds`, fan-in in [2, max_fanin], random
/// polarities, children sampled among later vertices, `vars` variables
/// shared by a pool of variable sinks. Vertex 1 is the root.
CircuitDag gen_random_circuit(std::size_t functions, std::size_t vars,
                              std::size_t max_fanin,
                              const std::vector<GateKind>& kinds,
                              std::uint64_t seed);

// `.circ` text format. The root is always vertex 1 in files.
CircuitDag parse_circuit(std::string_view text);
CircuitDag read_circuit_file(const std::string& path);
void write_circuit(std::ostream& os, const CircuitDag& circuit);

}  // namespace qdag

#endif  // QDAG_CIRCUIT_HPP

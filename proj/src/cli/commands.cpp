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

#include "qdag/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "qdag/bounds.hpp"
#include "qdag/circuit.hpp"
#include "qdag/dag.hpp"
#include "qdag/dp_engine.hpp"
#include "qdag/error.hpp"
#include "qdag/paths.hpp"
#include "qdag/zhegalkin.hpp"

namespace qdag::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string_view mode_name(SimMode m) {
  return m == SimMode::kExact ? "exact" : "stochastic";
}

SimConfig make_config(const RunOptions& run) {
  SimConfig cfg;
  cfg.mode = run.mode;
  cfg.epsilon_base = run.epsilon;
  cfg.boost = run.boost;
  cfg.validate();
  if (run.trials == 0) throw Error(ErrorCode::kInvalidParams, "trials must be at least 1");
  return cfg;
}

struct TrialStats {
  std::size_t trials = 0;
  std::size_t correct = 0;
  std::uint64_t sum_queries = 0;
  std::uint64_t max_queries = 0;

  void add(bool ok, std::uint64_t queries) {
    ++trials;
    correct += ok ? 1 : 0;
    sum_queries += queries;
    max_queries = std::max(max_queries, queries);
  }
  double correct_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(trials);
  }
  double mean_queries() const {
    return trials == 0 ? 0.0 : static_cast<double>(sum_queries) / static_cast<double>(trials);
  }
};

void print_stats(std::ostream& out, const TrialStats& s, double bound) {
  fmt::print(out, "correct_rate={:.6f}\nmean_queries={:.3f}\nmax_queries={}\nbound_value={:.6f}\n",
             s.correct_rate(), s.mean_queries(), s.max_queries, bound);
}

void print_run_header(std::ostream& out, std::string_view problem, const RunOptions& run,
                      std::size_t boost) {
  fmt::print(out, "problem={}\nmode={}\nseed={}\ntrials={}\nboost={}\n", problem,
             mode_name(run.mode), run.seed, run.trials, boost);
}

Assignment parse_assignment(const std::vector<std::string>& items) {
  Assignment out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    const std::string name = item.substr(0, eq);
    const std::string bit = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (name.empty() || (bit != "0" && bit != "1")) {
      throw Error(ErrorCode::kFormatError, "assignment '" + item + "' is not name=0|1");
    }
    const bool value = bit == "1";
    auto [it, fresh] = out.emplace(name, value);
    if (!fresh && it->second != value) {
      throw Error(ErrorCode::kConflictingAssignment,
                  "variable '" + name + "' assigned both 0 and 1");
    }
  }
  return out;
}

std::string join_values(const std::vector<Value>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) s += ',';
    s += t[i].to_string();
  }
  return s;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return RandomStream(seed).substream(trial).next_u64();
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (ends_with(path, ".dag")) {
      const Dag dag = read_dag_file(path);
      fmt::print(out, "valid {} n={} m={} nhat={} sinks={}\n",
                 dag.weighted() ? "dag" : "dag-unweighted", dag.n(), dag.m(), dag.n_hat(),
                 dag.sink_count());
    } else if (ends_with(path, ".circ")) {
      const CircuitDag c = read_circuit_file(path);
      fmt::print(out, "valid circuit n={} m={} nhat={} sinks={} vars={}\n", c.dag().n(),
                 c.dag().m(), c.dag().n_hat(), c.dag().sink_count(), c.variables().size());
    } else if (ends_with(path, ".anf")) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      const ZhegalkinPolynomial p = normalize(parse_anf(buf.str()));
      fmt::print(out, "valid anf k={} vars={} normalized={}\n", p.k(), p.var_count(),
                 to_string(p));
    } else {
      throw Error(ErrorCode::kFormatError, "unknown extension on '" + path +
                                               "' (expected .dag, .circ or .anf)");
    }
    return kExitOk;
  });
}

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig cfg = make_config(opts.run);
    const Assignment assignment = parse_assignment(opts.assign);

    CircuitDag reference_circuit;
    std::optional<bool> constant;
    if (ends_with(opts.path, ".anf")) {
      std::ifstream in(opts.path, std::ios::binary);
      if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + opts.path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      const ZhegalkinPolynomial poly = normalize(parse_anf(buf.str()));
      if (poly.k() == 0) {
        constant = poly.constant;
      } else {
        reference_circuit = compile_to_circuit(poly);
        fmt::print(out, "compiled n={} m={} nhat={}\n", reference_circuit.dag().n(),
                   reference_circuit.dag().m(), reference_circuit.dag().n_hat());
      }
    } else if (ends_with(opts.path, ".circ")) {
      reference_circuit = read_circuit_file(opts.path);
    } else {
      throw Error(ErrorCode::kFormatError, "eval expects a .circ or .anf file");
    }

    if (constant) {
      print_run_header(out, "eval", opts.run, 0);
      fmt::print(out, "n=0\nm=0\nnhat=0\nreference={0:d}\nresult={0:d}\n", *constant ? 1 : 0);
      TrialStats stats;
      for (std::size_t t = 0; t < opts.run.trials; ++t) stats.add(true, 0);
      print_stats(out, stats, 0.0);
      return kExitOk;
    }

    const CircuitDag circuit =
        reference_circuit.has_xor() ? rewrite_xor(reference_circuit) : reference_circuit;
    const bool reference = eval_circuit_classical(reference_circuit, assignment);
    const Dag& dag = circuit.dag();
    TrialStats stats;
    std::optional<bool> first;
    std::size_t boost = 0;
    for (std::size_t t = 0; t < opts.run.trials; ++t) {
      CircuitRun r = eval_circuit_quantum(circuit, assignment, cfg, trial_seed(opts.run.seed, t));
      if (!first) first = r.value;
      boost = r.boost;
      stats.add(r.value == reference, r.ledger.total());
    }
    print_run_header(out, "eval", opts.run, boost);
    fmt::print(out, "n={}\nm={}\nnhat={}\nreference={}\nresult={}\n", dag.n(), dag.m(),
               dag.n_hat(), reference ? 1 : 0, *first ? 1 : 0);
    print_stats(out, stats, dag.n_hat() >= 2 ? boolean_dp_bound(dag.n_hat(), dag.m()) : 0.0);
    return kExitOk;
  });
}

int cmd_compile_anf(const std::string& in_path, const std::string& out_path, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + in_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const ZhegalkinPolynomial poly = normalize(parse_anf(buf.str()));
    const CircuitDag circuit = compile_to_circuit(poly);
    if (out_path.empty() || out_path == "-") {
      write_circuit(out, circuit);
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + out_path + "'");
      write_circuit(file, circuit);
      fmt::print(out, "wrote {} n={} m={} nhat={}\n", out_path, circuit.dag().n(),
                 circuit.dag().m(), circuit.dag().n_hat());
    }
    return kExitOk;
  });
}

int cmd_longest_path(const LongestPathOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig cfg = make_config(opts.run);
    const Dag dag = read_dag_file(opts.path);
    const ClassicalLongestPaths reference = longest_paths_classical(dag, opts.source);
    TrialStats stats;
    std::optional<LongestPathTable> first;
    std::size_t boost = 0;
    for (std::size_t t = 0; t < opts.run.trials; ++t) {
      LongestPathRun r = longest_paths_quantum(dag, opts.source, cfg, trial_seed(opts.run.seed, t));
      stats.add(r.table == reference.table, r.ledger.total());
      boost = r.boost;
      if (!first) first = std::move(r.table);
    }
    print_run_header(out, "longest-path", opts.run, boost);
    fmt::print(out, "n={}\nm={}\nnhat={}\nsource={}\nt={}\nreference={}\nclassical_queries={}\n",
               dag.n(), dag.m(), dag.n_hat(), opts.source, join_values(first->t),
               join_values(reference.table.t), reference.queries);
    print_stats(out, stats, dag.n() >= 2 ? longest_path_bound(dag.n(), dag.m()) : 0.0);
    return kExitOk;
  });
}

int cmd_diameter(const DiameterOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig cfg = make_config(opts.run);
    const Dag dag = read_dag_file(opts.path);
    const ClassicalDiameter reference = diameter_classical(dag);
    TrialStats stats;
    std::optional<std::int64_t> first;
    for (std::size_t t = 0; t < opts.run.trials; ++t) {
      DiameterRun r = diameter_quantum(dag, cfg, trial_seed(opts.run.seed, t));
      stats.add(r.diam == reference.diam, r.ledger.total());
      if (!first) first = r.diam;
    }
    print_run_header(out, "diameter", opts.run, cfg.boost.value_or(default_boost(dag.n())));
    fmt::print(out, "n={}\nm={}\nnhat={}\ndiam={}\nreference={}\nclassical_queries={}\n", dag.n(),
               dag.m(), dag.n_hat(), *first, reference.diam, reference.queries);
    print_stats(out, stats, dag.n() >= 2 ? diameter_bound(dag.n(), dag.n_hat(), dag.m()) : 0.0);
    return kExitOk;
  });
}

namespace {

struct BenchRow {
  std::string problem;
  std::size_t n = 0, m = 0, n_hat = 0;
  std::uint64_t seed = 0;
  TrialStats stats;
  std::uint64_t classical_queries = 0;
  double bound = 0.0;
};

Combiner parse_combiner(const std::string& name) {
  if (name == "and") return Combiner::kAnd;
  if (name == "or") return Combiner::kOr;
  if (name == "nand") return Combiner::kNand;
  if (name == "max") return Combiner::kMax;
  if (name == "min") return Combiner::kMin;
  throw Error(ErrorCode::kInvalidParams, "unknown combiner '" + name + "'");
}

BenchRow bench_instance(const BenchOptions& opts, const SimConfig& cfg, std::size_t size,
                        std::uint64_t instance_seed) {
  const std::size_t width = std::min(opts.width, size);
  const std::size_t layers = (size + width - 1) / width + 1;
  BenchRow row;
  row.seed = instance_seed;
  RandomStream rng(instance_seed, 1);

  if (opts.problem == "dp") {
    const Combiner h = parse_combiner(opts.combiner);
    const Dag dag = gen_layered(layers, width, opts.density, std::nullopt, instance_seed);
    std::vector<Value> sinks(dag.n() + 1);
    for (std::size_t v = dag.n_hat() + 1; v <= dag.n(); ++v) {
      sinks[v] = is_boolean(h) ? Value::bit(rng.bernoulli(0.5))
                               : Value(static_cast<std::int64_t>(rng.uniform(1000)));
    }
    DpProblem problem;
    problem.combiners.assign(dag.n_hat(), h);
    problem.sink_eval = [&sinks](Vertex v) { return sinks[v]; };
    const Value truth = classical_dp(dag, problem)[0];
    for (std::size_t t = 0; t < opts.run.trials; ++t) {
      DpResult r = run_dp(dag, problem, cfg, trial_seed(instance_seed, t));
      row.stats.add(r.answer == truth, r.ledger.total());
    }
    row.problem = "dp-" + std::string(combiner_name(h));
    row.n = dag.n();
    row.m = dag.m();
    row.n_hat = dag.n_hat();
    row.classical_queries = dag.m();
    row.bound = is_boolean(h) ? boolean_dp_bound(dag.n_hat(), dag.m())
                              : extremum_dp_bound(dag.n_hat(), dag.m());
  } else if (opts.problem == "longest-path") {
    const Dag dag = gen_layered(layers, width, opts.density, WeightRange{1, 10}, instance_seed);
    const ClassicalLongestPaths truth = longest_paths_classical(dag, 1);
    for (std::size_t t = 0; t < opts.run.trials; ++t) {
      LongestPathRun r = longest_paths_quantum(dag, 1, cfg, trial_seed(instance_seed, t));
      row.stats.add(r.table == truth.table, r.ledger.total());
    }
    row.problem = "longest-path";
    row.n = dag.n();
    row.m = dag.m();
    row.n_hat = dag.n_hat();
    row.classical_queries = truth.queries;
    row.bound = longest_path_bound(dag.n(), dag.m());
  } else if (opts.problem == "diameter") {
    const Dag dag = gen_layered(layers, width, opts.density, std::nullopt, instance_seed);
    const ClassicalDiameter truth = diameter_classical(dag);
    for (std::size_t t = 0; t < opts.run.trials; ++t) {
      DiameterRun r = diameter_quantum(dag, cfg, trial_seed(instance_seed, t));
      row.stats.add(r.diam == truth.diam, r.ledger.total());
    }
    row.problem = "diameter";
    row.n = dag.n();
    row.m = dag.m();
    row.n_hat = dag.n_hat();
    row.classical_queries = truth.queries;
    row.bound = diameter_bound(dag.n(), dag.n_hat(), dag.m());
  } else {
    throw Error(ErrorCode::kInvalidParams, "unknown bench problem '" + opts.problem + "'");
  }
  return row;
}

}  // namespace

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig cfg = make_config(opts.run);
    if (opts.family != "layered") {
      throw Error(ErrorCode::kInvalidParams, "unknown family '" + opts.family + "'");
    }
    if (opts.sizes.empty() || opts.instances == 0 || opts.width == 0 ||
        std::any_of(opts.sizes.begin(), opts.sizes.end(), [](std::size_t s) { return s < 2; })) {
      throw Error(ErrorCode::kInvalidParams,
                  "bench needs at least one size >= 2, width >= 1 and instances >= 1");
    }

    std::ostringstream csv;
    csv << kBenchCsvHeader << '\n';
    double c_max = 0.0;
    double c_min = std::numeric_limits<double>::infinity();
    for (std::size_t si = 0; si < opts.sizes.size(); ++si) {
      for (std::size_t r = 0; r < opts.instances; ++r) {
        const std::uint64_t instance_seed =
            RandomStream(opts.run.seed).substream(si).substream(r).next_u64();
        const BenchRow row = bench_instance(opts, cfg, opts.sizes[si], instance_seed);
        fmt::print(csv, "{},{},{},{},{},{},{},{:.6f},{:.3f},{},{},{:.6f}\n", row.problem, row.n,
                   row.m, row.n_hat, mode_name(opts.run.mode), row.seed, row.stats.trials,
                   row.stats.correct_rate(), row.stats.mean_queries(), row.stats.max_queries,
                   row.classical_queries, row.bound);
        const double c = row.stats.mean_queries() / row.bound;
        c_max = std::max(c_max, c);
        c_min = std::min(c_min, c);
      }
    }

    std::ostream* summary = &out;
    if (opts.out.empty() || opts.out == "-") {
      out << csv.str();
      summary = &err;
    } else {
      std::ofstream file(opts.out, std::ios::binary);
      if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + opts.out + "'");
      file << csv.str();
      if (!file) throw Error(ErrorCode::kIoError, "write to '" + opts.out + "' failed");
    }
    fmt::print(*summary, "fitted_C={:.6f}\nmin_C={:.6f}\nC_spread={:.6f}\n", c_max, c_min,
               c_max / c_min);
    return kExitOk;
  });
}

}  // namespace qdag::cli

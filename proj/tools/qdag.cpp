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

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "qdag/cli.hpp"

namespace {

void add_run_flags(CLI::App* cmd, qdag::cli::RunOptions& run) {
  static const std::map<std::string, qdag::SimMode> kModes{
      {"exact", qdag::SimMode::kExact}, {"stochastic", qdag::SimMode::kStochastic}};
  cmd->add_option("--mode", run.mode, "exact | stochastic")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  cmd->add_option("--seed", run.seed, "base seed; trials derive substreams from it");
  cmd->add_option("--trials", run.trials, "number of simulated runs")->check(CLI::PositiveNumber);
  cmd->add_option("--boost", run.boost, "boost count k (default 2*ceil(log2 n_hat))")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", run.epsilon, "base error of one primitive run, in (0, 0.5]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-model simulator for quantum dynamic programming on DAGs"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a .dag, .circ or .anf file");
  validate->add_option("path", validate_path)->required();

  qdag::cli::EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "evaluate a .circ or .anf file");
  eval->add_option("path", eval_opts.path)->required();
  eval->add_option("--assign", eval_opts.assign, "name=0|1 list")->delimiter(',');
  add_run_flags(eval, eval_opts.run);

  std::string anf_in, circ_out;
  auto* compile = app.add_subcommand("compile-anf", "compile a .anf file to a .circ circuit");
  compile->add_option("path", anf_in)->required();
  compile->add_option("-o,--out", circ_out, ".circ output path (stdout when omitted)");

  qdag::cli::LongestPathOptions lp_opts;
  auto* lp = app.add_subcommand("longest-path", "single-source longest paths on a weighted .dag");
  lp->add_option("path", lp_opts.path)->required();
  lp->add_option("--source", lp_opts.source, "source vertex (1-based)");
  add_run_flags(lp, lp_opts.run);

  qdag::cli::DiameterOptions diam_opts;
  auto* diam = app.add_subcommand("diameter", "diameter of an unweighted .dag");
  diam->add_option("path", diam_opts.path)->required();
  add_run_flags(diam, diam_opts.run);

  qdag::cli::BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "query-count sweep over generated instances");
  bench->add_option("--family", bench_opts.family, "instance family (layered)");
  bench->add_option("--problem", bench_opts.problem, "dp | longest-path | diameter");
  bench->add_option("--combiner", bench_opts.combiner, "and | or | nand | max | min");
  bench->add_option("--sizes", bench_opts.sizes, "target n_hat values")
      ->delimiter(',')
      ->required();
  bench->add_option("--width", bench_opts.width, "layer width");
  bench->add_option("--density", bench_opts.density, "edge probability between layers");
  bench->add_option("--instances", bench_opts.instances, "instances per size");
  bench->add_option("--out", bench_opts.out, "CSV path (stdout when omitted)");
  add_run_flags(bench, bench_opts.run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qdag::cli::kExitInput;
  }

  if (*validate) return qdag::cli::cmd_validate(validate_path, std::cout, std::cerr);
  if (*eval) return qdag::cli::cmd_eval(eval_opts, std::cout, std::cerr);
  if (*compile) return qdag::cli::cmd_compile_anf(anf_in, circ_out, std::cout, std::cerr);
  if (*lp) return qdag::cli::cmd_longest_path(lp_opts, std::cout, std::cerr);
  if (*diam) return qdag::cli::cmd_diameter(diam_opts, std::cout, std::cerr);
  if (*bench) return qdag::cli::cmd_bench(bench_opts, std::cout, std::cerr);
  return qdag::cli::kExitInput;
}

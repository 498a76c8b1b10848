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

#ifndef QDAG_CLI_HPP
#define QDAG_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdag/primitives.hpp"

namespace qdag::cli {

// Subcommand bodies behind the `qdag` executable. Each returns the process
// exit code: 0 success, 2 input or validation error, 3 internal error.

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

struct RunOptions {
  SimMode mode = SimMode::kExact;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::optional<std::size_t> boost;
  double epsilon = 0.5;
};

/// Seed of trial `trial` under run seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

struct EvalOptions {
  std::string path;
  std::vector<std::string> assign;  // "name=0|1" items
  RunOptions run;
};
int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);

int cmd_compile_anf(const std::string& in_path, const std::string& out_path,
                    std::ostream& out, std::ostream& err);

struct LongestPathOptions {
  std::string path;
  std::uint32_t source = 1;
  RunOptions run;
};
int cmd_longest_path(const LongestPathOptions& opts, std::ostream& out,
                     std::ostream& err);

struct DiameterOptions {
  std::string path;
  RunOptions run;
};
int cmd_diameter(const DiameterOptions& opts, std::ostream& out,
                 std::ostream& err);

struct BenchOptions {
  std::string family = "layered";
  std::string problem = "dp";      // dp | longest-path | diameter
  std::string combiner = "or";     // and | or | nand | max | min (dp only)
  std::vector<std::size_t> sizes;  // target n_hat per row
  std::size_t width = 16;
  double density = 0.5;
  std::size_t instances = 1;
  RunOptions run;
  std::string out;  // CSV path; empty writes CSV to `out`
};

inline constexpr const char* kBenchCsvHeader =
    "problem,n,m,nhat,mode,seed,trials,correct_rate,mean_queries,max_queries,"
    "classical_queries,bound_value";

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qdag::cli

#endif  // QDAG_CLI_HPP

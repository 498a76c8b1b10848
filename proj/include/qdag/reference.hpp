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

#ifndef QDAG_REFERENCE_HPP
#define QDAG_REFERENCE_HPP

#include <cstddef>
#include <cstdint>

#include "qdag/dag.hpp"
#include "qdag/paths.hpp"

namespace qdag {

// Slow exhaustive oracles for checking the classical references themselves.

inline constexpr std::size_t kBruteForcePathsMaxN = 12;
inline constexpr std::size_t kBruteForceDiameterMaxN = 64;

/// Enumerates every path out of `source`. n <= 12.
LongestPathTable brute_force_paths(const Dag& dag, Vertex source);

/// max over ordered pairs of the shortest-path length (0 if no pair is
/// connected), via Floyd–Warshall on an adjacency matrix. n <= 64.
std::int64_t brute_force_diameter(const Dag& dag);

}  // namespace qdag

#endif  // QDAG_REFERENCE_HPP

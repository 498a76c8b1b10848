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

#ifndef QDAG_BOUNDS_HPP
#define QDAG_BOUNDS_HPP

#include <cmath>
#include <cstddef>

namespace qdag {

// Asymptotic query bounds without their constants, for fitting measured
// totals. Logarithms are base 2.

/// √(n̂·m·log n̂): AND/OR/NAND dynamic programs.
inline double boolean_dp_bound(std::size_t n_hat, std::size_t m) {
  const double nh = static_cast<double>(n_hat);
  return std::sqrt(nh * static_cast<double>(m) * std::log2(nh));
}

/// √(n̂·m)·log n̂: MAX/MIN dynamic programs.
inline double extremum_dp_bound(std::size_t n_hat, std::size_t m) {
  const double nh = static_cast<double>(n_hat);
  return std::sqrt(nh * static_cast<double>(m)) * std::log2(nh);
}

/// √(n·m)·log n: single-source longest paths.
inline double longest_path_bound(std::size_t n, std::size_t m) {
  const double nn = static_cast<double>(n);
  return std::sqrt(nn * static_cast<double>(m)) * std::log2(nn);
}

/// n̂·(n + √(n·m))·log n: diameter.
inline double diameter_bound(std::size_t n, std::size_t n_hat, std::size_t m) {
  const double nn = static_cast<double>(n);
  return static_cast<double>(n_hat) * (nn + std::sqrt(nn * static_cast<double>(m))) *
         std::log2(nn);
}

}  // namespace qdag

#endif  // QDAG_BOUNDS_HPP

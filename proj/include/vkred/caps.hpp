// Copyright 2026 The vkred Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include "vkred/errors.hpp"

namespace vkred {

// Limits for every exact oracle. Oracles refuse with SizeError when an
// instance exceeds its cap; nothing is ever truncated silently.
struct EnumerationCaps {
  // 3-SAT brute force: at most 2^sat_variables assignments.
  int sat_variables = 24;
  // 2-CSP brute force: |Sigma|^|V(H)| total assignments.
  std::uint64_t csp_assignments = std::uint64_t{1} << 24;
  // R-CSP / G-CSP brute force: (|Sigma|+1)^|V| partial assignments.
  std::uint64_t partial_assignments = std::uint64_t{1} << 27;
  // Knapsack subset enumeration: 2^knapsack_items subsets.
  int knapsack_items = 22;
  // Size-bounded subset enumeration: sum_{s <= s_max} C(n, s).
  std::uint64_t bounded_subsets = std::uint64_t{1} << 24;
  // Dynamic program: prod_j (B_j + 1) lattice cells.
  std::uint64_t lattice_cells = std::uint64_t{1} << 22;
  // Disperser verification: C(k, r) unions per attempt.
  std::uint64_t disperser_subsets = std::uint64_t{1} << 20;
  // Exact simplex: number of structural variables.
  int lp_variables = 64;
};

namespace detail {

inline void check_cap(std::uint64_t needed, std::uint64_t cap, const std::string& what) {
  if (needed > cap) {
    throw SizeError(what + " needs " + std::to_string(needed) + " > cap " + std::to_string(cap));
  }
}

}  // namespace detail
}  // namespace vkred

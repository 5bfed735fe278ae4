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

// End-to-end walk through the library on small seeded instances: a planted
// 3-SAT formula is reduced to a rectangular CSP, the CSP to vector knapsack,
// and the knapsack instance is solved exactly and approximately.

#include <iostream>

#include "vkred/vkred.hpp"

int main() {
  using namespace vkred;
  Rng rng(2026);

  const PlantedSat sat = planted_sat(8, 6, 3, rng);
  const SatEmbeddingRoute route = sat_to_rcsp_embedding_route(sat.instance, 6);
  const RcspInstance& pi = route.reduction.instance;
  std::cout << "3-SAT: " << sat.instance.variable_count() << " variables, " << sat.instance.clause_count()
            << " clauses\n";
  std::cout << "R-CSP: " << pi.graph().vertex_count() << " vertices, " << pi.graph().edge_count()
            << " edges, |Sigma| = " << pi.sigma_size() << ", embedding depth " << route.depth << "\n";

  EnumerationCaps caps;
  caps.partial_assignments = UINT64_MAX;
  std::cout << "Par = " << par_bruteforce(pi, caps).size << " (all " << pi.graph().vertex_count()
            << " vertices when the formula is satisfiable)\n";

  // A smaller R-CSP keeps the simple reduction within brute-force range.
  const PlantedRcsp small = planted_rcsp(complete_graph(4), 2, 3, rng);
  const VkInstance vk = rcsp_to_vk_simple(small.instance);
  std::cout << "simple reduction: d = " << vk.dimensions() << ", n = " << vk.item_count()
            << ", OPT = " << solve_bruteforce(vk).value << ", Par = " << par_bruteforce(small.instance).size << "\n";

  const EmbedReduction embed = rcsp_to_vk_embed(small.instance, 2);
  const Solution planted = vk_solution_from_assignment(small.instance, small.planted, EmbedVariant{2});
  std::cout << "embed reduction (F = 2): d = " << embed.instance.dimensions() << ", Q = " << embed.artifacts.Q
            << ", planted solution profit " << profit(embed.instance, planted) << ", feasible "
            << (check_feasible(embed.instance, planted) ? "yes" : "no") << "\n";

  const VkInstance mixed = random_mixed_vk(12, 3, 40, 20, 0.5, rng);
  const Profit opt = solve_dp(mixed).value;
  const Profit approx = profit(mixed, approx_sqrt_d(mixed, 7));
  std::cout << "mixed instance: OPT = " << opt << ", approximation = " << approx << "\n";
  return 0;
}

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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vkred/caps.hpp"
#include "vkred/csp.hpp"
#include "vkred/disperser.hpp"
#include "vkred/embedding.hpp"
#include "vkred/errors.hpp"
#include "vkred/graph.hpp"

namespace vkred {

// Output of the 3-SAT -> R-CSP construction, with the tables needed to
// translate assignments in both directions.
//
// A member g of Phi_x is stored as an integer whose bits, most significant
// first, are the values of variables[x] in increasing variable order, so
// increasing integers enumerate Phi_x lexicographically.
struct SatReduction {
  RcspInstance instance;
  std::vector<std::vector<int>> clause_sets;   // C_x, sorted clause indices
  std::vector<std::vector<int>> variables;     // var(C_x), sorted
  std::vector<std::vector<std::uint64_t>> satisfying;  // Phi_x
  int packed_bits = 0;                         // max |var(C_x) & var(C_y)| over edges
  std::vector<std::string> warnings;

  // Range value reserved for vertex x; never produced by a Phi_x member.
  int sentinel(Vertex x) const { return (1 << packed_bits) + x; }
};

namespace detail {

inline bool variable_value(std::uint64_t packed, int width, int position) {
  return (packed >> (width - 1 - position)) & 1U;
}

// Restriction of g (over vars) to the sorted subset `shared`, packed with the
// first shared variable as the most significant bit.
inline int pack_restriction(std::uint64_t g, const std::vector<int>& vars, const std::vector<int>& shared) {
  int packed = 0;
  const int width = static_cast<int>(vars.size());
  for (int v : shared) {
    const int pos = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    packed = (packed << 1) | static_cast<int>(variable_value(g, width, pos));
  }
  return packed;
}

}  // namespace detail

inline SatReduction sat_to_rcsp(const SatInstance& phi, const Graph& h,
                                std::vector<std::vector<int>> clause_sets, const EnumerationCaps& caps = {}) {
  detail::require<InputError>(static_cast<int>(clause_sets.size()) == h.vertex_count(),
                              "one clause set per vertex of H required");
  SatReduction red;
  const int k = h.vertex_count();
  red.variables.resize(k);
  red.satisfying.resize(k);
  for (Vertex x = 0; x < k; ++x) {
    auto& cs = clause_sets[x];
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::vector<int> vars;
    for (int c : cs) {
      detail::require<InputError>(c >= 0 && c < phi.clause_count(), "clause index out of range");
      for (int v : phi.clause_variables(c)) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const int width = static_cast<int>(vars.size());
    if (width > caps.sat_variables) {
      throw SizeError("clause set of vertex " + std::to_string(x) + " spans " + std::to_string(width) +
                      " variables > cap " + std::to_string(caps.sat_variables));
    }
    std::vector<bool> s(phi.variable_count(), false);
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << width); ++g) {
      for (int p = 0; p < width; ++p) s[vars[p]] = detail::variable_value(g, width, p);
      bool ok = true;
      for (int c : cs) {
        if (!clause_satisfied(phi.clause(c), s)) {
          ok = false;
          break;
        }
      }
      if (ok) red.satisfying[x].push_back(g);
    }
    if (red.satisfying[x].empty()) {
      red.warnings.push_back("vertex " + std::to_string(x) + ": clause set unsatisfiable, no consistent symbol");
    }
    red.variables[x] = std::move(vars);
  }
  red.clause_sets = std::move(clause_sets);

  std::vector<std::vector<int>> shared(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto [x, y] = h.edge(e);
    std::set_intersection(red.variables[x].begin(), red.variables[x].end(), red.variables[y].begin(),
                          red.variables[y].end(), std::back_inserter(shared[e]));
    red.packed_bits = std::max(red.packed_bits, static_cast<int>(shared[e].size()));
  }
  detail::require<SizeError>(red.packed_bits <= 24, "shared variable sets too large to pack");

  int sigma = 1;
  for (const auto& table : red.satisfying) sigma = std::max(sigma, static_cast<int>(table.size()));
  const int upsilon = (1 << red.packed_bits) + k;

  auto projections = [&](int e, Vertex x) {
    std::vector<int> proj(sigma, red.sentinel(x));
    const auto& table = red.satisfying[x];
    for (std::size_t s = 0; s < table.size(); ++s)
      proj[s] = detail::pack_restriction(table[s], red.variables[x], shared[e]);
    return proj;
  };
  std::vector<std::vector<int>> first(h.edge_count()), second(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    first[e] = projections(e, h.edge(e).first);
    second[e] = projections(e, h.edge(e).second);
  }
  red.instance = RcspInstance(h, sigma, upsilon, std::move(first), std::move(second));
  return red;
}

// Completeness map: phi(x) = index of s restricted to var(C_x) in Phi_x,
// bottom where the restriction violates a clause of C_x.
inline PartialAssignment rcsp_assignment_from_sat(const SatReduction& red, const std::vector<bool>& s) {
  const int k = static_cast<int>(red.variables.size());
  PartialAssignment phi(k);
  for (Vertex x = 0; x < k; ++x) {
    const auto& vars = red.variables[x];
    std::uint64_t g = 0;
    for (int v : vars) {
      detail::require<InputError>(v < static_cast<int>(s.size()), "assignment too short");
      g = (g << 1) | static_cast<std::uint64_t>(s[v]);
    }
    const auto& table = red.satisfying[x];
    auto it = std::lower_bound(table.begin(), table.end(), g);
    if (it != table.end() && *it == g) phi[x] = static_cast<Symbol>(it - table.begin());
  }
  return phi;
}

struct SatEmbeddingRoute {
  SatReduction reduction;
  ConnectedEmbedding embedding;
  int depth = 0;
};

inline SatEmbeddingRoute sat_to_rcsp_embedding_route(const SatInstance& phi, int k,
                                                     const EnumerationCaps& caps = {}) {
  Graph g = build_clause_conflict_graph(phi);
  ConnectedEmbedding emb = simple_connected_embedding(g, k);
  EmbeddingCheck check = validate_embedding(emb);
  if (!check.valid) throw ConstructionError("embedding failed validation: " + check.diagnostic);
  SatReduction red = sat_to_rcsp(phi, emb.target, preimages(emb), caps);
  return {std::move(red), std::move(emb), check.depth};
}

struct SatDisperserRoute {
  SatReduction reduction;
  Disperser disperser;
};

// Default subset size: min(m, ceil(3m / (eps r))).
inline int default_disperser_subset_size(int m, int r, double epsilon) {
  if (epsilon <= 0.0) return m;
  const double bound = std::ceil(3.0 * m / (epsilon * r) - 1e-9);
  return bound >= m ? m : std::max(0, static_cast<int>(bound));
}

inline SatDisperserRoute sat_to_rcsp_disperser_route(const SatInstance& phi, int k, int r, double epsilon,
                                                     std::uint64_t seed, std::optional<int> subset_size = {},
                                                     const EnumerationCaps& caps = {}) {
  const int m = phi.clause_count();
  const int l = subset_size.value_or(default_disperser_subset_size(m, r, epsilon));
  Disperser disp = build_disperser(m, k, l, r, epsilon, seed, caps);
  SatReduction red = sat_to_rcsp(phi, complete_graph(k), disp.sets, caps);
  return {std::move(red), std::move(disp)};
}

}  // namespace vkred

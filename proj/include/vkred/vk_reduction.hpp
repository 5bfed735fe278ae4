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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vkred/csp.hpp"
#include "vkred/errors.hpp"
#include "vkred/knapsack.hpp"
#include "vkred/numeric.hpp"

namespace vkred {

// Both R-CSP -> VK reductions use the item set V x Sigma, with item (v, sigma)
// at index v * |Sigma| + sigma.
inline std::size_t item_index(const RcspInstance& pi, Vertex v, Symbol sigma) {
  return static_cast<std::size_t>(v) * pi.sigma_size() + sigma;
}

struct SimpleVariant {};
struct EmbedVariant {
  int F = 1;
};
using ReductionVariant = std::variant<SimpleVariant, EmbedVariant>;

// ---------------------------------------------------------------------------
// Simple reduction: one dimension per vertex and two per edge, budget m.
// Dimension v is the vertex constraint; n + 2e and n + 2e + 1 are the (e,u)
// and (e,v) constraints of edge e = (u, v), u < v.

inline VkInstance rcsp_to_vk_simple(const RcspInstance& pi) {
  const Graph& g = pi.graph();
  const int n = g.vertex_count(), sigma = pi.sigma_size();
  const int d = n + 2 * g.edge_count();
  const BigInt m = pi.upsilon_size();
  std::vector<Profit> profits(static_cast<std::size_t>(n) * sigma, 1);
  std::vector<CostVector> costs(profits.size(), CostVector(d, 0));
  for (Vertex v = 0; v < n; ++v)
    for (Symbol s = 0; s < sigma; ++s) costs[item_index(pi, v, s)][v] = m;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const int du = n + 2 * e, dv = du + 1;
    for (Symbol s = 0; s < sigma; ++s) {
      const int pv = pi.projection(e, v, s) + 1, pu = pi.projection(e, u, s) + 1;
      costs[item_index(pi, v, s)][du] = m - pv;
      costs[item_index(pi, v, s)][dv] = pv;
      costs[item_index(pi, u, s)][du] = pu;
      costs[item_index(pi, u, s)][dv] = m - pu;
    }
  }
  return VkInstance(d, std::move(profits), std::move(costs), CostVector(d, m));
}

// ---------------------------------------------------------------------------
// Dimension-embedding reduction.
//
// D lists the vertices (ids 0..n-1) followed by the edges (ids n..n+|E|-1);
// chunk l is the l-th run of F consecutive ids, and ord_l(j) is the 1-based
// position of j inside its chunk. Dimensions (l,1) and (l,2) are 2l and 2l+1.

struct EmbedReductionArtifacts {
  int F = 1;
  int m = 1;
  std::vector<std::vector<int>> chunks;  // D_l as element ids
  std::vector<int> chunk_of;             // element id -> l
  std::vector<int> ord;                  // element id -> ord within its chunk
  std::vector<std::vector<int>> J;       // J[l][v]
  std::vector<int> N;                    // N_l
  BigInt Q;
  BigInt M;

  int chunk_count() const { return static_cast<int>(chunks.size()); }
};

inline EmbedReductionArtifacts embed_artifacts(const RcspInstance& pi, int F) {
  const Graph& g = pi.graph();
  const int n = g.vertex_count();
  detail::require<PreconditionError>(g.is_regular(3), "embed reduction needs a 3-regular constraint graph");
  // F > |V(G)| is accepted: the chunking and digit bounds remain valid, only
  // the soundness bound |V| - 2qF becomes weaker.
  detail::require<PreconditionError>(F >= 1, "F must be at least 1");
  EmbedReductionArtifacts art;
  art.F = F;
  art.m = pi.upsilon_size();
  const int total = n + g.edge_count();
  art.chunk_of.resize(total);
  art.ord.resize(total);
  for (int id = 0; id < total; ++id) {
    if (id % F == 0) art.chunks.emplace_back();
    art.chunks.back().push_back(id);
    art.chunk_of[id] = id / F;
    art.ord[id] = id % F + 1;
  }
  const int r = art.chunk_count();
  art.J.assign(r, std::vector<int>(n, 0));
  for (Vertex v = 0; v < n; ++v) ++art.J[art.chunk_of[v]][v];
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    ++art.J[art.chunk_of[n + e]][u];
    ++art.J[art.chunk_of[n + e]][v];
  }
  art.N.assign(r, 0);
  for (int l = 0; l < r; ++l)
    for (Vertex v = 0; v < n; ++v) art.N[l] += art.J[l][v];
  art.Q = BigInt(3) * F * F * art.m * n * pi.sigma_size();
  art.M = pow_big(art.Q, 2 * F);
  return art;
}

// w_j(v, sigma) for constraint j of D, with range values shifted to 1..m.
inline BigInt constraint_weight(const RcspInstance& pi, int j, Vertex v, Symbol sigma) {
  const Graph& g = pi.graph();
  const int n = g.vertex_count();
  if (j < n) return j == v ? BigInt(pi.upsilon_size()) : BigInt(0);
  const int e = j - n;
  const auto [a, b] = g.edge(e);
  if (v == a) return pi.projection(e, v, sigma) + 1;
  if (v == b) return pi.upsilon_size() - (pi.projection(e, v, sigma) + 1);
  return 0;
}

struct EmbedReduction {
  VkInstance instance;
  EmbedReductionArtifacts artifacts;
};

inline EmbedReduction rcsp_to_vk_embed(const RcspInstance& pi, int F) {
  EmbedReductionArtifacts art = embed_artifacts(pi, F);
  const Graph& g = pi.graph();
  const int n = g.vertex_count(), sigma = pi.sigma_size(), r = art.chunk_count();
  const int d = 2 * r;

  std::vector<std::vector<BigInt>> q_pow(r);
  CostVector budget(d, 0);
  for (int l = 0; l < r; ++l) {
    for (int j : art.chunks[l]) {
      q_pow[l].push_back(pow_big(art.Q, art.ord[j]));
      budget[2 * l] += art.m * q_pow[l].back();
    }
    budget[2 * l + 1] = art.M * art.N[l] - budget[2 * l];
  }

  std::vector<Profit> profits(static_cast<std::size_t>(n) * sigma, 0);
  std::vector<CostVector> costs(profits.size(), CostVector(d, 0));
  for (Vertex v = 0; v < n; ++v) {
    Profit p = 0;
    for (int l = 0; l < r; ++l) p += art.J[l][v];
    for (Symbol s = 0; s < sigma; ++s) {
      const std::size_t i = item_index(pi, v, s);
      profits[i] = p;
      for (int l = 0; l < r; ++l) {
        if (art.J[l][v] == 0) continue;
        BigInt c1 = 0;
        for (std::size_t t = 0; t < art.chunks[l].size(); ++t)
          c1 += constraint_weight(pi, art.chunks[l][t], v, s) * q_pow[l][t];
        costs[i][2 * l + 1] = art.M * art.J[l][v] - c1;
        costs[i][2 * l] = std::move(c1);
      }
    }
  }
  return {VkInstance(d, std::move(profits), std::move(costs), std::move(budget)), std::move(art)};
}

// ---------------------------------------------------------------------------
// Completeness: S = {(v, phi(v))}.

inline Solution vk_solution_from_assignment(const RcspInstance& pi, const PartialAssignment& phi) {
  detail::check_partial_domain(pi.graph().vertex_count(), phi, pi.sigma_size());
  detail::require<PreconditionError>(phi.total(), "assignment must be total");
  detail::require<PreconditionError>(is_consistent(pi, phi), "assignment must be consistent");
  std::vector<std::size_t> items;
  for (Vertex v = 0; v < pi.graph().vertex_count(); ++v) items.push_back(item_index(pi, v, phi[v]));
  return Solution(std::move(items));
}

// The chosen item set is the same for both variants.
inline Solution vk_solution_from_assignment(const RcspInstance& pi, const PartialAssignment& phi,
                                            const ReductionVariant&) {
  return vk_solution_from_assignment(pi, phi);
}

// ---------------------------------------------------------------------------
// Soundness.

namespace detail {

// symbols_of[v] = symbols sigma with (v, sigma) in s.
inline std::vector<std::vector<Symbol>> symbols_by_vertex(const RcspInstance& pi, const Solution& s) {
  std::vector<std::vector<Symbol>> symbols_of(pi.graph().vertex_count());
  for (std::size_t i : s.chosen) {
    const auto v = static_cast<Vertex>(i / pi.sigma_size());
    symbols_of.at(v).push_back(static_cast<Symbol>(i % pi.sigma_size()));
  }
  return symbols_of;
}

}  // namespace detail

// Simple variant: phi(v) is the unique sigma with (v, sigma) in s.
inline PartialAssignment extract_simple(const RcspInstance& pi, const VkInstance& target, const Solution& s) {
  detail::require<PreconditionError>(check_feasible(target, s), "solution is infeasible in the target instance");
  const auto symbols_of = detail::symbols_by_vertex(pi, s);
  PartialAssignment phi(pi.graph().vertex_count());
  for (Vertex v = 0; v < pi.graph().vertex_count(); ++v)
    if (symbols_of[v].size() == 1) phi[v] = symbols_of[v].front();
  return phi;
}

// Tight chunks: sum over (v, sigma) in s of J(l, v) equals N_l.
inline std::vector<char> tight_chunks(const EmbedReductionArtifacts& art, const RcspInstance& pi,
                                      const Solution& s) {
  std::vector<char> tight(art.chunk_count(), 0);
  for (int l = 0; l < art.chunk_count(); ++l) {
    int sum = 0;
    for (std::size_t i : s.chosen) sum += art.J[l][static_cast<Vertex>(i / pi.sigma_size())];
    tight[l] = sum == art.N[l];
  }
  return tight;
}

// Embed variant: phi(v) = sigma_v for every v whose own constraint and
// incident edge constraints all lie in tight chunks.
inline PartialAssignment extract_embed(const RcspInstance& pi, const EmbedReductionArtifacts& art,
                                       const VkInstance& target, const Solution& s) {
  detail::require<PreconditionError>(check_feasible(target, s), "solution is infeasible in the target instance");
  const Graph& g = pi.graph();
  const int n = g.vertex_count();
  const auto tight = tight_chunks(art, pi, s);
  const auto symbols_of = detail::symbols_by_vertex(pi, s);
  PartialAssignment phi(n);
  for (Vertex v = 0; v < n; ++v) {
    bool all_tight = tight[art.chunk_of[v]];
    for (int e : g.incident_edges(v)) all_tight = all_tight && tight[art.chunk_of[n + e]];
    if (all_tight && symbols_of[v].size() == 1) phi[v] = symbols_of[v].front();
  }
  return phi;
}

inline PartialAssignment extract_partial_assignment(const RcspInstance& pi, const ReductionVariant& variant,
                                                    const Solution& s) {
  if (std::holds_alternative<SimpleVariant>(variant)) return extract_simple(pi, rcsp_to_vk_simple(pi), s);
  const EmbedReduction red = rcsp_to_vk_embed(pi, std::get<EmbedVariant>(variant).F);
  return extract_embed(pi, red.artifacts, red.instance, s);
}

// Guaranteed size of the embed extraction: |V| - 2 q F with q the profit deficit.
inline long long embed_extraction_bound(const RcspInstance& pi, int F, Profit solution_profit) {
  const long long n = pi.graph().vertex_count();
  const long long q = n + 2LL * pi.graph().edge_count() - solution_profit;
  return n - 2 * q * F;
}

// ---------------------------------------------------------------------------
// Base-Q uniqueness: sum_i a_i Q^i == sum_i A Q^i iff a_i == A for all i,
// with exponents 1..n. Returns whether that equivalence holds for `digits`.

inline BigInt base_q_value(const std::vector<BigInt>& digits, const BigInt& Q) {
  BigInt total = 0, power = Q;
  for (const BigInt& a : digits) {
    total += a * power;
    power *= Q;
  }
  return total;
}

inline bool verify_base_q_digits(const std::vector<BigInt>& digits, const BigInt& Q, const BigInt& A) {
  detail::require<InputError>(Q >= 2, "base must be at least 2");
  detail::require<InputError>(A >= 0 && A < Q, "target digit out of range");
  for (const BigInt& a : digits) detail::require<InputError>(a >= 0 && a < Q, "digit out of range");
  const bool sums_equal = base_q_value(digits, Q) == base_q_value(std::vector<BigInt>(digits.size(), A), Q);
  const bool digits_equal = std::all_of(digits.begin(), digits.end(), [&](const BigInt& a) { return a == A; });
  return sums_equal == digits_equal;
}

}  // namespace vkred

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

// Seeded random instance generators. Each takes an Rng by reference so that
// callers control stream derivation.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "vkred/csp.hpp"
#include "vkred/errors.hpp"
#include "vkred/graph.hpp"
#include "vkred/knapsack.hpp"
#include "vkred/rng.hpp"

namespace vkred {

// G(n, p).
inline Graph random_graph(int n, double p, Rng& rng) {
  detail::require<InputError>(n >= 0, "negative vertex count");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Uniform-ish simple 3-regular graph by the pairing model, resampling until
// the pairing has no loop or multi-edge.
inline Graph random_regular3(int n, Rng& rng) {
  detail::require<InputError>(n >= 4 && n % 2 == 0, "a 3-regular graph needs an even vertex count >= 4");
  std::vector<int> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    rng.shuffle(points);
    std::set<Edge> edges;
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      int u = points[i], v = points[i + 1];
      if (u > v) std::swap(u, v);
      simple = u != v && edges.emplace(u, v).second;
    }
    if (simple) return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
  }
  throw ConstructionError("pairing model did not produce a simple graph");
}

inline RcspInstance random_rcsp(const Graph& g, int sigma, int m, Rng& rng) {
  detail::require<InputError>(sigma >= 1 && m >= 1, "alphabet and range must be nonempty");
  std::vector<std::vector<int>> first(g.edge_count(), std::vector<int>(sigma)), second = first;
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int s = 0; s < sigma; ++s) first[e][s] = rng.uniform_int(0, m - 1);
    for (int s = 0; s < sigma; ++s) second[e][s] = rng.uniform_int(0, m - 1);
  }
  return RcspInstance(g, sigma, m, std::move(first), std::move(second));
}

struct PlantedRcsp {
  RcspInstance instance;
  PartialAssignment planted;  // total and consistent
};

// Random projections, then each edge is forced to agree on a random value at
// the planted symbols.
inline PlantedRcsp planted_rcsp(const Graph& g, int sigma, int m, Rng& rng) {
  detail::require<InputError>(sigma >= 1 && m >= 1, "alphabet and range must be nonempty");
  PartialAssignment planted(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) planted[v] = rng.uniform_int(0, sigma - 1);
  std::vector<std::vector<int>> first(g.edge_count(), std::vector<int>(sigma)), second = first;
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int s = 0; s < sigma; ++s) first[e][s] = rng.uniform_int(0, m - 1);
    for (int s = 0; s < sigma; ++s) second[e][s] = rng.uniform_int(0, m - 1);
    const int value = rng.uniform_int(0, m - 1);
    first[e][planted[g.edge(e).first]] = value;
    second[e][planted[g.edge(e).second]] = value;
  }
  return {RcspInstance(g, sigma, m, std::move(first), std::move(second)), std::move(planted)};
}

// Every pair allowed with probability density; an empty relation gets one
// random pair. With `satisfiable`, a random total assignment is planted.
inline Csp2Instance random_csp2(const Graph& h, int sigma, double density, bool satisfiable, Rng& rng) {
  detail::require<InputError>(sigma >= 1, "alphabet must be nonempty");
  std::vector<Symbol> planted(h.vertex_count());
  for (auto& s : planted) s = rng.uniform_int(0, sigma - 1);
  std::vector<std::vector<std::pair<Symbol, Symbol>>> constraints(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    for (Symbol a = 0; a < sigma; ++a)
      for (Symbol b = 0; b < sigma; ++b)
        if (rng.bernoulli(density)) constraints[e].emplace_back(a, b);
    if (satisfiable) constraints[e].emplace_back(planted[h.edge(e).first], planted[h.edge(e).second]);
    if (constraints[e].empty()) constraints[e].emplace_back(rng.uniform_int(0, sigma - 1), rng.uniform_int(0, sigma - 1));
  }
  return Csp2Instance(h, sigma, std::move(constraints));
}

struct PlantedSat {
  SatInstance instance;
  std::vector<bool> planted;
};

// Clauses satisfied by a hidden assignment, each variable used in at most
// max_occurrence clauses. Stops early if no three variables have capacity left.
inline PlantedSat planted_sat(int n, int clauses, int max_occurrence, Rng& rng) {
  detail::require<InputError>(n >= 3, "3-SAT needs at least three variables");
  detail::require<InputError>(clauses >= 0 && max_occurrence >= 1, "bad clause count or occurrence bound");
  std::vector<bool> planted(n);
  for (int v = 0; v < n; ++v) planted[v] = rng.bernoulli(0.5);
  std::vector<int> used(n, 0);
  std::vector<Clause> out;
  for (int c = 0; c < clauses; ++c) {
    std::vector<int> open;
    for (int v = 0; v < n; ++v)
      if (used[v] < max_occurrence) open.push_back(v);
    if (open.size() < 3) break;
    rng.shuffle(open);
    Clause clause;
    for (int t = 0; t < 3; ++t) {
      clause[t] = Literal{open[t], rng.bernoulli(0.5)};
      ++used[open[t]];
    }
    if (!clause_satisfied(clause, planted)) {
      const int t = rng.uniform_int(0, 2);
      clause[t].negated = !clause[t].negated;
    }
    out.push_back(clause);
  }
  return {SatInstance(n, std::move(out), max_occurrence), std::move(planted)};
}

// Profits in [1, max_profit], budgets in [0, max_budget], costs in [0, B_j].
inline VkInstance random_vk(int n, int d, long long max_budget, Profit max_profit, Rng& rng) {
  detail::require<InputError>(n >= 0 && d >= 0 && max_budget >= 0 && max_profit >= 1, "bad knapsack parameters");
  CostVector budget(d);
  std::vector<long long> b(d);
  for (int j = 0; j < d; ++j) budget[j] = b[j] = static_cast<long long>(rng.uniform(0, static_cast<std::uint64_t>(max_budget)));
  std::vector<Profit> profits(n);
  std::vector<CostVector> costs(n, CostVector(d));
  for (int i = 0; i < n; ++i) {
    profits[i] = static_cast<Profit>(rng.uniform(1, static_cast<std::uint64_t>(max_profit)));
    for (int j = 0; j < d; ++j) costs[i][j] = static_cast<long long>(rng.uniform(0, static_cast<std::uint64_t>(b[j])));
  }
  return VkInstance(d, std::move(profits), std::move(costs), std::move(budget));
}

namespace detail {

// Costs of an item exceeding half the budget in at least one coordinate.
inline CostVector unbounded_cost(const std::vector<long long>& b, Rng& rng) {
  const int d = static_cast<int>(b.size());
  CostVector c(d);
  for (int j = 0; j < d; ++j) c[j] = static_cast<long long>(rng.uniform(0, static_cast<std::uint64_t>(b[j])));
  const int heavy = rng.uniform_int(0, d - 1);
  c[heavy] = static_cast<long long>(rng.uniform(static_cast<std::uint64_t>(b[heavy] / 2 + 1), static_cast<std::uint64_t>(b[heavy])));
  return c;
}

inline CostVector bounded_cost(const std::vector<long long>& b, Rng& rng) {
  CostVector c(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) c[j] = static_cast<long long>(rng.uniform(0, static_cast<std::uint64_t>(b[j] / 2)));
  return c;
}

}  // namespace detail

// Instances whose items are all 2-unbounded (every budget >= 1, d >= 1).
// `bounded_fraction` of the items are drawn 2-bounded instead (0 gives a
// pure 2-unbounded instance).
inline VkInstance random_mixed_vk(int n, int d, long long max_budget, Profit max_profit, double bounded_fraction,
                                  Rng& rng) {
  detail::require<InputError>(n >= 0 && d >= 1 && max_budget >= 1 && max_profit >= 1, "bad knapsack parameters");
  CostVector budget(d);
  std::vector<long long> b(d);
  for (int j = 0; j < d; ++j) budget[j] = b[j] = static_cast<long long>(rng.uniform(1, static_cast<std::uint64_t>(max_budget)));
  std::vector<Profit> profits(n);
  std::vector<CostVector> costs(n);
  for (int i = 0; i < n; ++i) {
    profits[i] = static_cast<Profit>(rng.uniform(1, static_cast<std::uint64_t>(max_profit)));
    costs[i] = rng.bernoulli(bounded_fraction) ? detail::bounded_cost(b, rng) : detail::unbounded_cost(b, rng);
  }
  return VkInstance(d, std::move(profits), std::move(costs), std::move(budget));
}

inline VkInstance random_unbounded_vk(int n, int d, long long max_budget, Profit max_profit, Rng& rng) {
  return random_mixed_vk(n, d, max_budget, max_profit, 0.0, rng);
}

}  // namespace vkred

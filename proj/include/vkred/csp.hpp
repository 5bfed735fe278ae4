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

// Constraint-problem models (3-SAT, 2-CSP, rectangular 2-CSP and its
// per-vertex-alphabet generalization) together with exact brute-force oracles.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vkred/caps.hpp"
#include "vkred/errors.hpp"
#include "vkred/graph.hpp"
#include "vkred/numeric.hpp"

namespace vkred {

using Symbol = int;
inline constexpr Symbol kUnassigned = -1;

// vertex -> symbol or kUnassigned (the bottom symbol).
struct PartialAssignment {
  std::vector<Symbol> values;

  PartialAssignment() = default;
  explicit PartialAssignment(std::size_t vertex_count) : values(vertex_count, kUnassigned) {}
  explicit PartialAssignment(std::vector<Symbol> v) : values(std::move(v)) {}

  std::size_t vertex_count() const { return values.size(); }
  bool assigned(Vertex v) const { return values.at(v) != kUnassigned; }
  Symbol operator[](Vertex v) const { return values.at(v); }
  Symbol& operator[](Vertex v) { return values.at(v); }

  // Number of assigned vertices.
  int size() const {
    return static_cast<int>(std::count_if(values.begin(), values.end(),
                                          [](Symbol s) { return s != kUnassigned; }));
  }
  bool total() const { return size() == static_cast<int>(values.size()); }

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
};

// ---------------------------------------------------------------------------
// 3-SAT(D)

struct Literal {
  int variable = 0;  // 0-based
  bool negated = false;

  bool evaluate(const std::vector<bool>& s) const { return s[variable] != negated; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

class SatInstance {
 public:
  SatInstance() = default;

  // max_occurrence < 0 means "use the actual maximum occurrence count".
  SatInstance(int variable_count, std::vector<Clause> clauses, int max_occurrence = -1)
      : variable_count_(variable_count), clauses_(std::move(clauses)) {
    detail::require<InputError>(variable_count >= 0, "negative variable count");
    std::vector<int> occurrences(variable_count, 0);
    for (const Clause& c : clauses_) {
      for (const Literal& l : c) {
        detail::require<InputError>(l.variable >= 0 && l.variable < variable_count,
                                    "literal variable out of range");
        ++occurrences[l.variable];
      }
      detail::require<InputError>(c[0].variable != c[1].variable && c[0].variable != c[2].variable &&
                                      c[1].variable != c[2].variable,
                                  "clause must reference three distinct variables");
    }
    const int actual = occurrences.empty() ? 0 : *std::max_element(occurrences.begin(), occurrences.end());
    if (max_occurrence < 0) {
      max_occurrence_ = actual;
    } else {
      detail::require<InputError>(actual <= max_occurrence,
                                  "a variable occurs in more than D clauses");
      max_occurrence_ = max_occurrence;
    }
  }

  int variable_count() const { return variable_count_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  int max_occurrence() const { return max_occurrence_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int c) const { return clauses_.at(c); }

  // Sorted variable set of clause c.
  std::vector<int> clause_variables(int c) const {
    std::vector<int> vars;
    for (const Literal& l : clauses_.at(c)) vars.push_back(l.variable);
    std::sort(vars.begin(), vars.end());
    return vars;
  }

  friend bool operator==(const SatInstance&, const SatInstance&) = default;

 private:
  int variable_count_ = 0;
  std::vector<Clause> clauses_;
  int max_occurrence_ = 0;
};

inline bool clause_satisfied(const Clause& c, const std::vector<bool>& s) {
  return c[0].evaluate(s) || c[1].evaluate(s) || c[2].evaluate(s);
}

inline int count_satisfied(const SatInstance& phi, const std::vector<bool>& s) {
  if (static_cast<int>(s.size()) != phi.variable_count()) {
    throw InputError("assignment length " + std::to_string(s.size()) + " != variable count " +
                     std::to_string(phi.variable_count()));
  }
  int satisfied = 0;
  for (const Clause& c : phi.clauses()) satisfied += clause_satisfied(c, s);
  return satisfied;
}

struct SatOptimum {
  int value = 0;
  std::vector<bool> assignment;
};

// Maximum number of simultaneously satisfiable clauses, over all 2^n assignments.
inline SatOptimum sat_opt_bruteforce(const SatInstance& phi, const EnumerationCaps& caps = {}) {
  const int n = phi.variable_count();
  if (n > caps.sat_variables || n > 62) {
    throw SizeError("3-SAT brute force over " + std::to_string(n) + " variables exceeds cap " +
                    std::to_string(caps.sat_variables));
  }
  // Clause c is satisfied by mask iff (mask & pos) != 0 or (~mask & neg) != 0.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  for (const Clause& c : phi.clauses()) {
    std::uint64_t pos = 0, neg = 0;
    for (const Literal& l : c) (l.negated ? neg : pos) |= std::uint64_t{1} << l.variable;
    masks.emplace_back(pos, neg);
  }
  SatOptimum best{-1, {}};
  std::uint64_t best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    int satisfied = 0;
    for (const auto& [pos, neg] : masks) satisfied += ((mask & pos) != 0) || ((~mask & neg) != 0);
    if (satisfied > best.value) {
      best.value = satisfied;
      best_mask = mask;
      if (satisfied == phi.clause_count()) break;
    }
  }
  best.assignment.resize(n);
  for (int v = 0; v < n; ++v) best.assignment[v] = (best_mask >> v) & 1;
  return best;
}

// ---------------------------------------------------------------------------
// 2-CSP

class Csp2Instance {
 public:
  Csp2Instance() = default;

  // constraints[e] lists the allowed (sigma_u, sigma_v) pairs of edge e of h.
  Csp2Instance(Graph h, int sigma_size, std::vector<std::vector<std::pair<Symbol, Symbol>>> constraints)
      : graph_(std::move(h)), sigma_size_(sigma_size), constraints_(std::move(constraints)) {
    detail::require<InputError>(sigma_size >= 1, "alphabet must be nonempty");
    detail::require<InputError>(static_cast<int>(constraints_.size()) == graph_.edge_count(),
                                "one constraint per edge required");
    allowed_.assign(constraints_.size(), std::vector<char>(static_cast<std::size_t>(sigma_size) * sigma_size, 0));
    for (std::size_t e = 0; e < constraints_.size(); ++e) {
      auto& pairs = constraints_[e];
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      detail::require<InputError>(!pairs.empty(), "constraint of edge " + std::to_string(e) + " is empty");
      for (const auto& [a, b] : pairs) {
        detail::require<InputError>(a >= 0 && b >= 0 && a < sigma_size && b < sigma_size,
                                    "constraint symbol out of range");
        allowed_[e][static_cast<std::size_t>(a) * sigma_size + b] = 1;
      }
    }
  }

  const Graph& graph() const { return graph_; }
  int sigma_size() const { return sigma_size_; }
  const std::vector<std::pair<Symbol, Symbol>>& constraint(int e) const { return constraints_.at(e); }
  const std::vector<std::vector<std::pair<Symbol, Symbol>>>& constraints() const { return constraints_; }

  bool allows(int e, Symbol a, Symbol b) const {
    return allowed_[e][static_cast<std::size_t>(a) * sigma_size_ + b] != 0;
  }

  friend bool operator==(const Csp2Instance& a, const Csp2Instance& b) {
    return a.graph_ == b.graph_ && a.sigma_size_ == b.sigma_size_ && a.constraints_ == b.constraints_;
  }

 private:
  Graph graph_;
  int sigma_size_ = 1;
  std::vector<std::vector<std::pair<Symbol, Symbol>>> constraints_;
  std::vector<std::vector<char>> allowed_;
};

// Number of satisfied edges under a total assignment.
inline int csp_value(const Csp2Instance& gamma, const std::vector<Symbol>& lambda) {
  const Graph& h = gamma.graph();
  if (static_cast<int>(lambda.size()) != h.vertex_count()) {
    throw InputError("2-CSP assignment must cover every vertex");
  }
  for (Symbol s : lambda) {
    if (s < 0 || s >= gamma.sigma_size()) throw InputError("2-CSP assignment symbol out of range");
  }
  int satisfied = 0;
  for (int e = 0; e < h.edge_count(); ++e) {
    satisfied += gamma.allows(e, lambda[h.edge(e).first], lambda[h.edge(e).second]);
  }
  return satisfied;
}

struct CspOptimum {
  int value = 0;
  std::vector<Symbol> assignment;
};

inline CspOptimum csp_opt_bruteforce(const Csp2Instance& gamma, const EnumerationCaps& caps = {}) {
  const Graph& h = gamma.graph();
  const int n = h.vertex_count();
  detail::check_cap(saturating_pow(gamma.sigma_size(), n), caps.csp_assignments,
                    "2-CSP brute force");
  std::vector<Symbol> lambda(n, 0);
  CspOptimum best{csp_value(gamma, lambda), lambda};
  while (true) {
    int i = 0;
    while (i < n && lambda[i] == gamma.sigma_size() - 1) lambda[i++] = 0;
    if (i == n) break;
    ++lambda[i];
    const int value = csp_value(gamma, lambda);
    if (value > best.value) best = {value, lambda};
  }
  return best;
}

// ---------------------------------------------------------------------------
// R-CSP: every edge constraint is pi_{e,u}(sigma_u) == pi_{e,v}(sigma_v).
//
// The range Upsilon = {1..m} is stored 0-based; callers that use range values
// arithmetically (the knapsack reductions) add one.

class RcspInstance {
 public:
  RcspInstance() = default;

  // first[e][sigma] / second[e][sigma] are the projections at the smaller and
  // larger endpoint of edge e respectively, with values in [0, m).
  RcspInstance(Graph g, int sigma_size, int upsilon_size, std::vector<std::vector<int>> first,
               std::vector<std::vector<int>> second)
      : graph_(std::move(g)),
        sigma_size_(sigma_size),
        upsilon_size_(upsilon_size),
        first_(std::move(first)),
        second_(std::move(second)) {
    detail::require<InputError>(sigma_size >= 1, "alphabet must be nonempty");
    detail::require<InputError>(upsilon_size >= 1, "projection range must be nonempty");
    detail::require<InputError>(static_cast<int>(first_.size()) == graph_.edge_count() &&
                                    static_cast<int>(second_.size()) == graph_.edge_count(),
                                "one projection pair per edge required");
    for (const auto* table : {&first_, &second_}) {
      for (const auto& proj : *table) {
        detail::require<InputError>(static_cast<int>(proj.size()) == sigma_size,
                                    "projection must be total on the alphabet");
        for (int value : proj) {
          detail::require<InputError>(value >= 0 && value < upsilon_size, "projection value out of range");
        }
      }
    }
  }

  const Graph& graph() const { return graph_; }
  int sigma_size() const { return sigma_size_; }
  int upsilon_size() const { return upsilon_size_; }
  const std::vector<std::vector<int>>& first_projections() const { return first_; }
  const std::vector<std::vector<int>>& second_projections() const { return second_; }

  // pi_{e,endpoint}(sigma), 0-based.
  int projection(int e, Vertex endpoint, Symbol sigma) const {
    return endpoint == graph_.edge(e).first ? first_[e][sigma] : second_[e][sigma];
  }

  bool satisfied(int e, Symbol sigma_first, Symbol sigma_second) const {
    return first_[e][sigma_first] == second_[e][sigma_second];
  }

  friend bool operator==(const RcspInstance&, const RcspInstance&) = default;

 private:
  Graph graph_;
  int sigma_size_ = 1;
  int upsilon_size_ = 1;
  std::vector<std::vector<int>> first_;
  std::vector<std::vector<int>> second_;
};

namespace detail {

inline void check_partial_domain(std::size_t vertex_count, const PartialAssignment& phi, int sigma_size) {
  if (phi.vertex_count() != vertex_count) throw InputError("partial assignment has wrong vertex count");
  for (Symbol s : phi.values) {
    if (s != kUnassigned && (s < 0 || s >= sigma_size)) throw InputError("symbol out of range");
  }
}

// Exhaustive search for a maximum consistent partial assignment.
// Vertices are decided in index order; each vertex tries its symbols and then
// bottom. A branch dies as soon as an edge between two assigned vertices is
// violated, or when it cannot beat the best size found so far.
template <typename Domain, typename Compatible>
std::pair<int, PartialAssignment> max_consistent_partial(const Graph& g, Domain&& domain,
                                                          Compatible&& compatible) {
  const int n = g.vertex_count();
  // back_edges[v] = (edge index, earlier neighbour)
  std::vector<std::vector<std::pair<int, Vertex>>> back_edges(n);
  for (int e = 0; e < g.edge_count(); ++e) back_edges[g.edge(e).second].emplace_back(e, g.edge(e).first);

  PartialAssignment current(n), best(n);
  int best_size = -1;
  int current_size = 0;

  std::function<void(int)> search = [&](int v) {
    if (best_size == n) return;
    if (current_size + (n - v) <= best_size) return;
    if (v == n) {
      best_size = current_size;
      best = current;
      return;
    }
    for (Symbol sigma : domain(v)) {
      bool ok = true;
      for (const auto& [e, w] : back_edges[v]) {
        if (current[w] != kUnassigned && !compatible(e, w, current[w], v, sigma)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current[v] = sigma;
      ++current_size;
      search(v + 1);
      --current_size;
      current[v] = kUnassigned;
      if (best_size == n) return;
    }
    search(v + 1);
  };
  search(0);
  return {best_size, best};
}

}  // namespace detail

inline bool is_consistent(const RcspInstance& pi, const PartialAssignment& phi) {
  const Graph& g = pi.graph();
  detail::check_partial_domain(g.vertex_count(), phi, pi.sigma_size());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (phi.assigned(u) && phi.assigned(v) && !pi.satisfied(e, phi[u], phi[v])) return false;
  }
  return true;
}

struct ParResult {
  int size = 0;
  PartialAssignment witness;
};

inline ParResult par_bruteforce(const RcspInstance& pi, const EnumerationCaps& caps = {}) {
  const Graph& g = pi.graph();
  detail::check_cap(saturating_pow(pi.sigma_size() + 1, g.vertex_count()), caps.partial_assignments,
                    "R-CSP partial-assignment enumeration");
  std::vector<Symbol> all(pi.sigma_size());
  for (int s = 0; s < pi.sigma_size(); ++s) all[s] = s;
  auto [size, witness] = detail::max_consistent_partial(
      g, [&](Vertex) -> const std::vector<Symbol>& { return all; },
      [&](int e, Vertex w, Symbol sw, Vertex v, Symbol sv) {
        return pi.projection(e, w, sw) == pi.projection(e, v, sv);
      });
  return {size, std::move(witness)};
}

// ---------------------------------------------------------------------------
// G-CSP: R-CSP with a separate alphabet per vertex.
//
// Alphabets are sorted sets of nonnegative symbol identifiers drawn from one
// shared identifier space; projections are stored aligned with the alphabet
// order of the corresponding endpoint.

class GcspInstance {
 public:
  GcspInstance() = default;

  GcspInstance(Graph l, std::vector<std::vector<Symbol>> alphabets, int upsilon_size,
               std::vector<std::vector<int>> first, std::vector<std::vector<int>> second)
      : graph_(std::move(l)),
        alphabets_(std::move(alphabets)),
        upsilon_size_(upsilon_size),
        first_(std::move(first)),
        second_(std::move(second)) {
    detail::require<InputError>(static_cast<int>(alphabets_.size()) == graph_.vertex_count(),
                                "one alphabet per vertex required");
    detail::require<InputError>(upsilon_size >= 1, "projection range must be nonempty");
    for (const auto& alpha : alphabets_) {
      detail::require<InputError>(!alpha.empty(), "vertex alphabets must be nonempty");
      detail::require<InputError>(std::is_sorted(alpha.begin(), alpha.end()) &&
                                      std::adjacent_find(alpha.begin(), alpha.end()) == alpha.end(),
                                  "vertex alphabets must be sorted and duplicate-free");
      detail::require<InputError>(alpha.front() >= 0, "symbol identifiers must be nonnegative");
    }
    detail::require<InputError>(static_cast<int>(first_.size()) == graph_.edge_count() &&
                                    static_cast<int>(second_.size()) == graph_.edge_count(),
                                "one projection pair per edge required");
    for (int h = 0; h < graph_.edge_count(); ++h) {
      const auto [x, y] = graph_.edge(h);
      detail::require<InputError>(first_[h].size() == alphabets_[x].size() &&
                                      second_[h].size() == alphabets_[y].size(),
                                  "projection must be total on the endpoint alphabet");
      for (const auto* proj : {&first_[h], &second_[h]}) {
        for (int value : *proj) {
          detail::require<InputError>(value >= 0 && value < upsilon_size, "projection value out of range");
        }
      }
    }
  }

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<Symbol>>& alphabets() const { return alphabets_; }
  const std::vector<Symbol>& alphabet(Vertex x) const { return alphabets_.at(x); }
  int upsilon_size() const { return upsilon_size_; }
  const std::vector<std::vector<int>>& first_projections() const { return first_; }
  const std::vector<std::vector<int>>& second_projections() const { return second_; }

  // Position of symbol in alphabet(x), or -1.
  int position(Vertex x, Symbol symbol) const {
    const auto& alpha = alphabets_.at(x);
    auto it = std::lower_bound(alpha.begin(), alpha.end(), symbol);
    return it != alpha.end() && *it == symbol ? static_cast<int>(it - alpha.begin()) : -1;
  }

  bool contains(Vertex x, Symbol symbol) const { return position(x, symbol) >= 0; }

  // pi_{h,endpoint}(symbol); symbol must belong to the endpoint's alphabet.
  int projection(int h, Vertex endpoint, Symbol symbol) const {
    const int pos = position(endpoint, symbol);
    if (pos < 0) throw InputError("symbol outside the vertex alphabet");
    return endpoint == graph_.edge(h).first ? first_[h][pos] : second_[h][pos];
  }

  friend bool operator==(const GcspInstance&, const GcspInstance&) = default;

 private:
  Graph graph_;
  std::vector<std::vector<Symbol>> alphabets_;
  int upsilon_size_ = 1;
  std::vector<std::vector<int>> first_;
  std::vector<std::vector<int>> second_;
};

inline void check_gcsp_domain(const GcspInstance& delta, const PartialAssignment& phi) {
  if (static_cast<int>(phi.vertex_count()) != delta.graph().vertex_count()) {
    throw InputError("partial assignment has wrong vertex count");
  }
  for (Vertex x = 0; x < delta.graph().vertex_count(); ++x) {
    if (phi.assigned(x) && !delta.contains(x, phi[x])) {
      throw InputError("vertex " + std::to_string(x) + " assigned a symbol outside its alphabet");
    }
  }
}

inline bool gcsp_is_consistent(const GcspInstance& delta, const PartialAssignment& phi) {
  check_gcsp_domain(delta, phi);
  const Graph& l = delta.graph();
  for (int h = 0; h < l.edge_count(); ++h) {
    const auto [x, y] = l.edge(h);
    if (phi.assigned(x) && phi.assigned(y) &&
        delta.projection(h, x, phi[x]) != delta.projection(h, y, phi[y])) {
      return false;
    }
  }
  return true;
}

inline ParResult gcsp_par_bruteforce(const GcspInstance& delta, const EnumerationCaps& caps = {}) {
  const Graph& l = delta.graph();
  std::uint64_t space = 1;
  for (const auto& alpha : delta.alphabets()) space = saturating_mul(space, alpha.size() + 1);
  detail::check_cap(space, caps.partial_assignments, "G-CSP partial-assignment enumeration");
  auto [size, witness] = detail::max_consistent_partial(
      l, [&](Vertex x) -> const std::vector<Symbol>& { return delta.alphabet(x); },
      [&](int h, Vertex w, Symbol sw, Vertex v, Symbol sv) {
        return delta.projection(h, w, sw) == delta.projection(h, v, sv);
      });
  return {size, std::move(witness)};
}

}  // namespace vkred

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
#include <vector>

#include "vkred/csp.hpp"
#include "vkred/errors.hpp"
#include "vkred/graph.hpp"

namespace vkred {

// 2-CSP -> G-CSP -> R-CSP.
//
// In the G-CSP the pair (a, b) of H-edge x is the symbol a * |Sigma| + b.

inline Symbol encode_pair(const Csp2Instance& gamma, Symbol a, Symbol b) { return a * gamma.sigma_size() + b; }
inline std::pair<Symbol, Symbol> decode_pair(const Csp2Instance& gamma, Symbol id) {
  return {id / gamma.sigma_size(), id % gamma.sigma_size()};
}

namespace detail {

// Coordinate (0 or 1) of H-edge x that holds the vertex shared with H-edge y.
inline int shared_coordinate(const Graph& h, int x, int y) {
  const auto [x1, x2] = h.edge(x);
  const auto [y1, y2] = h.edge(y);
  return (x1 == y1 || x1 == y2) ? 0 : 1;
}

}  // namespace detail

inline GcspInstance csp2_to_gcsp(const Csp2Instance& gamma) {
  const Graph& h = gamma.graph();
  detail::require<PreconditionError>(h.is_regular(3), "2-CSP constraint graph must be 3-regular");
  Graph l = line_graph(h);
  std::vector<std::vector<Symbol>> alphabets(h.edge_count());
  for (int x = 0; x < h.edge_count(); ++x)
    for (const auto& [a, b] : gamma.constraint(x)) alphabets[x].push_back(encode_pair(gamma, a, b));
  std::vector<std::vector<int>> first(l.edge_count()), second(l.edge_count());
  for (int t = 0; t < l.edge_count(); ++t) {
    const auto [x, y] = l.edge(t);
    const int cx = detail::shared_coordinate(h, x, y), cy = detail::shared_coordinate(h, y, x);
    for (const auto& pair : gamma.constraint(x)) first[t].push_back(cx == 0 ? pair.first : pair.second);
    for (const auto& pair : gamma.constraint(y)) second[t].push_back(cy == 0 ? pair.first : pair.second);
  }
  return GcspInstance(std::move(l), std::move(alphabets), gamma.sigma_size(), std::move(first), std::move(second));
}

// symbols[i] is the G-CSP symbol identifier behind R-CSP symbol i.
struct GcspToRcsp {
  RcspInstance instance;
  std::vector<Symbol> symbols;
  int upsilon_size = 0;  // range values >= this are per-vertex sentinels

  Symbol index_of(Symbol id) const {
    auto it = std::lower_bound(symbols.begin(), symbols.end(), id);
    if (it == symbols.end() || *it != id) throw InputError("symbol not in the union alphabet");
    return static_cast<Symbol>(it - symbols.begin());
  }
};

inline GcspToRcsp gcsp_to_rcsp(const GcspInstance& delta) {
  const Graph& l = delta.graph();
  detail::require<PreconditionError>(l.max_degree() <= 4, "G-CSP graph must have maximum degree 4");
  GcspToRcsp out;
  for (const auto& alpha : delta.alphabets()) out.symbols.insert(out.symbols.end(), alpha.begin(), alpha.end());
  std::sort(out.symbols.begin(), out.symbols.end());
  out.symbols.erase(std::unique(out.symbols.begin(), out.symbols.end()), out.symbols.end());
  out.upsilon_size = delta.upsilon_size();
  const int sigma = static_cast<int>(out.symbols.size());

  auto projections = [&](int t, Vertex u) {
    std::vector<int> proj(sigma);
    for (int s = 0; s < sigma; ++s) {
      proj[s] = delta.contains(u, out.symbols[s]) ? delta.projection(t, u, out.symbols[s])
                                                  : delta.upsilon_size() + u;
    }
    return proj;
  };
  std::vector<std::vector<int>> first(l.edge_count()), second(l.edge_count());
  for (int t = 0; t < l.edge_count(); ++t) {
    first[t] = projections(t, l.edge(t).first);
    second[t] = projections(t, l.edge(t).second);
  }
  out.instance =
      RcspInstance(l, sigma, delta.upsilon_size() + l.vertex_count(), std::move(first), std::move(second));
  return out;
}

inline PartialAssignment gcsp_assignment_to_rcsp(const GcspToRcsp& bridge, const PartialAssignment& phi) {
  PartialAssignment psi(phi.vertex_count());
  for (std::size_t x = 0; x < phi.vertex_count(); ++x)
    if (phi.values[x] != kUnassigned) psi.values[x] = bridge.index_of(phi.values[x]);
  return psi;
}

// Symbols outside Sigma_x are replaced by the first symbol of Sigma_x; such
// vertices have all incident edges violated in the R-CSP, so they are isolated
// from the assigned part and the replacement keeps the result consistent.
inline PartialAssignment rcsp_assignment_to_gcsp(const GcspInstance& delta, const GcspToRcsp& bridge,
                                                 const PartialAssignment& psi) {
  detail::check_partial_domain(delta.graph().vertex_count(), psi, static_cast<int>(bridge.symbols.size()));
  PartialAssignment phi(psi.vertex_count());
  for (Vertex x = 0; x < static_cast<Vertex>(psi.vertex_count()); ++x) {
    if (!psi.assigned(x)) continue;
    const Symbol id = bridge.symbols[psi[x]];
    phi[x] = delta.contains(x, id) ? id : delta.alphabet(x).front();
  }
  return phi;
}

// x = (u, v) gets (lambda(u), lambda(v)) when that pair satisfies x, else bottom.
inline PartialAssignment csp2_assignment_to_gcsp(const Csp2Instance& gamma, const std::vector<Symbol>& lambda) {
  const Graph& h = gamma.graph();
  detail::require<InputError>(static_cast<int>(lambda.size()) == h.vertex_count(), "assignment has wrong length");
  PartialAssignment phi(h.edge_count());
  for (int x = 0; x < h.edge_count(); ++x) {
    const auto [u, v] = h.edge(x);
    if (gamma.allows(x, lambda[u], lambda[v])) phi[x] = encode_pair(gamma, lambda[u], lambda[v]);
  }
  return phi;
}

// lambda(v) is read off the first incident H-edge that phi assigns; vertices
// with no assigned incident edge get symbol 0.
inline std::vector<Symbol> gcsp_assignment_to_csp2(const Csp2Instance& gamma, const PartialAssignment& phi) {
  const Graph& h = gamma.graph();
  detail::require<InputError>(static_cast<int>(phi.vertex_count()) == h.edge_count(),
                              "G-CSP assignment has wrong length");
  std::vector<Symbol> lambda(h.vertex_count(), 0);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    for (int x : h.incident_edges(v)) {
      if (!phi.assigned(x)) continue;
      const auto [a, b] = decode_pair(gamma, phi[x]);
      lambda[v] = h.edge(x).first == v ? a : b;
      break;
    }
  }
  return lambda;
}

struct Csp2ToRcsp {
  GcspInstance gcsp;
  GcspToRcsp bridge;
  const RcspInstance& instance() const { return bridge.instance; }
};

inline Csp2ToRcsp csp2_to_rcsp(const Csp2Instance& gamma) {
  GcspInstance delta = csp2_to_gcsp(gamma);
  GcspToRcsp bridge = gcsp_to_rcsp(delta);
  return {std::move(delta), std::move(bridge)};
}

inline PartialAssignment rcsp_assignment_from_csp2(const Csp2Instance& gamma, const Csp2ToRcsp& chain,
                                                   const std::vector<Symbol>& lambda) {
  return gcsp_assignment_to_rcsp(chain.bridge, csp2_assignment_to_gcsp(gamma, lambda));
}

inline std::vector<Symbol> extract_csp2_assignment(const Csp2Instance& gamma, const Csp2ToRcsp& chain,
                                                   const PartialAssignment& psi) {
  return gcsp_assignment_to_csp2(gamma, rcsp_assignment_to_gcsp(chain.gcsp, chain.bridge, psi));
}

}  // namespace vkred

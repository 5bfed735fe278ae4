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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vkred/errors.hpp"

namespace vkred {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple graph whose edges are stored oriented from the smaller to the larger
// endpoint and sorted lexicographically. Edge indices follow that order, so
// per-edge data elsewhere (projections, constraints) is a dense array.
class Graph {
 public:
  Graph() = default;

  // Accepts edges in either orientation; rejects self-loops and duplicates.
  Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
    detail::require<InputError>(vertex_count >= 0, "negative vertex count");
    for (auto& [u, v] : edges) {
      detail::require<InputError>(u >= 0 && v >= 0 && u < vertex_count && v < vertex_count,
                                  "edge endpoint out of range");
      detail::require<InputError>(u != v, "self-loop on vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    detail::require<InputError>(std::adjacent_find(edges.begin(), edges.end()) == edges.end(),
                                "duplicate edge");
    edges_ = std::move(edges);
    incident_.assign(vertex_count, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      incident_[edges_[e].first].push_back(e);
      incident_[edges_[e].second].push_back(e);
    }
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }

  // Indices of the edges adjacent to v, in increasing order.
  const std::vector<int>& incident_edges(Vertex v) const { return incident_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(incident_.at(v).size()); }

  bool is_regular(int r) const {
    return std::all_of(incident_.begin(), incident_.end(),
                       [r](const std::vector<int>& adj) { return static_cast<int>(adj.size()) == r; });
  }

  int max_degree() const {
    int best = 0;
    for (const auto& adj : incident_) best = std::max(best, static_cast<int>(adj.size()));
    return best;
  }

  std::optional<int> edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

  Vertex other_endpoint(int edge_index, Vertex v) const {
    const Edge& e = edges_.at(edge_index);
    return e.first == v ? e.second : e.first;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

inline Graph complete_graph(int k) {
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Graph(k, std::move(edges));
}

// Line graph: one vertex per edge of g (same indices), adjacent when the two
// edges share exactly one endpoint.
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> edges;
  for (int a = 0; a < g.edge_count(); ++a) {
    for (int b = a + 1; b < g.edge_count(); ++b) {
      const auto [a1, a2] = g.edge(a);
      const auto [b1, b2] = g.edge(b);
      const int shared = (a1 == b1) + (a1 == b2) + (a2 == b1) + (a2 == b2);
      if (shared == 1) edges.emplace_back(a, b);
    }
  }
  return Graph(g.edge_count(), std::move(edges));
}

// Connectivity of the subgraph induced by `members` (which must be nonempty).
inline bool induced_connected(const Graph& g, const std::vector<Vertex>& members) {
  if (members.empty()) return false;
  std::vector<char> in_set(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (Vertex v : members) in_set.at(v) = 1;
  std::vector<Vertex> stack{members.front()};
  seen[members.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (int e : g.incident_edges(v)) {
      Vertex w = g.other_endpoint(e, v);
      if (in_set[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (char c : in_set) distinct += c;
  return reached == distinct;
}

}  // namespace vkred

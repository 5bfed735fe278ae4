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
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vkred/csp.hpp"
#include "vkred/errors.hpp"
#include "vkred/graph.hpp"

namespace vkred {

// Clauses are vertices; two clauses are adjacent when they share a variable.
inline Graph build_clause_conflict_graph(const SatInstance& phi) {
  std::vector<std::vector<int>> vars(phi.clause_count());
  for (int c = 0; c < phi.clause_count(); ++c) vars[c] = phi.clause_variables(c);
  std::vector<Edge> edges;
  for (int a = 0; a < phi.clause_count(); ++a) {
    for (int b = a + 1; b < phi.clause_count(); ++b) {
      std::vector<int> common;
      std::set_intersection(vars[a].begin(), vars[a].end(), vars[b].begin(), vars[b].end(),
                            std::back_inserter(common));
      if (!common.empty()) edges.emplace_back(a, b);
    }
  }
  return Graph(phi.clause_count(), std::move(edges));
}

// psi: V(source) -> nonempty vertex subsets of target.
struct ConnectedEmbedding {
  Graph source;
  Graph target;
  std::vector<std::vector<Vertex>> images;  // each sorted
};

struct EmbeddingCheck {
  bool valid = false;
  int depth = 0;
  std::string diagnostic;
};

// V_x(psi) for every target vertex x.
inline std::vector<std::vector<Vertex>> preimages(const ConnectedEmbedding& emb) {
  std::vector<std::vector<Vertex>> sets(emb.target.vertex_count());
  for (Vertex u = 0; u < static_cast<Vertex>(emb.images.size()); ++u)
    for (Vertex x : emb.images[u])
      if (x >= 0 && x < emb.target.vertex_count()) sets[x].push_back(u);
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sets;
}

// Two vertex sets touch if they intersect or an edge of h joins them.
inline bool touch(const Graph& h, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<char> in_b(h.vertex_count(), 0);
  for (Vertex y : b) in_b[y] = 1;
  for (Vertex x : a) {
    if (in_b[x]) return true;
    for (int e : h.incident_edges(x))
      if (in_b[h.other_endpoint(e, x)]) return true;
  }
  return false;
}

inline EmbeddingCheck validate_embedding(const ConnectedEmbedding& emb) {
  EmbeddingCheck check;
  if (static_cast<int>(emb.images.size()) != emb.source.vertex_count()) {
    check.diagnostic = "image count differs from source vertex count";
    return check;
  }
  for (Vertex u = 0; u < emb.source.vertex_count(); ++u) {
    const auto& image = emb.images[u];
    for (Vertex x : image) {
      if (x < 0 || x >= emb.target.vertex_count()) {
        check.diagnostic = "image of source vertex " + std::to_string(u) + " leaves the target";
        return check;
      }
    }
    if (!induced_connected(emb.target, image)) {
      check.diagnostic = "image of source vertex " + std::to_string(u) + " is empty or disconnected";
      return check;
    }
  }
  for (const auto& [u, v] : emb.source.edges()) {
    if (!touch(emb.target, emb.images[u], emb.images[v])) {
      check.diagnostic = "images of source edge (" + std::to_string(u) + "," + std::to_string(v) + ") do not touch";
      return check;
    }
  }
  for (const auto& s : preimages(emb)) check.depth = std::max(check.depth, static_cast<int>(s.size()));
  check.valid = true;
  return check;
}

// 3-regular circulant on an even number n >= 4 of vertices: the cycle
// 0..n-1 plus the chords i -- i + n/2 (K4 for n = 4).
inline Graph circular_ladder(int n) {
  detail::require<ConstructionError>(n >= 4 && n % 2 == 0, "3-regular circulant needs an even n >= 4");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
  return Graph(n, std::move(edges));
}

// Embeds `source` into a 3-regular target with at most k vertices. Source
// vertices are placed in BFS order; each receives the shortest contiguous arc
// of the target cycle that touches the arcs of all already placed
// neighbours, preferring lightly loaded target vertices. The depth is
// whatever this greedy placement yields and is reported by validate_embedding.
inline ConnectedEmbedding simple_connected_embedding(const Graph& source, int k) {
  const int n = k % 2 == 0 ? k : k - 1;
  if (n < 4) throw ConstructionError("k = " + std::to_string(k) + " cannot host a 3-regular graph");
  ConnectedEmbedding emb{source, circular_ladder(n), std::vector<std::vector<Vertex>>(source.vertex_count())};
  const Graph& h = emb.target;

  std::vector<int> load(n, 0);
  std::vector<char> placed(source.vertex_count(), 0), queued(source.vertex_count(), 0);

  auto arc = [n](int start, int length) {
    std::vector<Vertex> vertices;
    for (int t = 0; t < length; ++t) vertices.push_back((start + t) % n);
    std::sort(vertices.begin(), vertices.end());
    return vertices;
  };

  auto place = [&](Vertex u) {
    std::vector<Vertex> anchors;
    for (int e : source.incident_edges(u)) {
      Vertex w = source.other_endpoint(e, u);
      if (placed[w]) anchors.push_back(w);
    }
    using Score = std::tuple<int, int, int, int>;  // length, max load, total load, start
    Score best_score{std::numeric_limits<int>::max(), 0, 0, 0};
    std::vector<Vertex> best;
    for (int length = 1; length <= n; ++length) {
      for (int start = 0; start < (length == n ? 1 : n); ++start) {
        std::vector<Vertex> candidate = arc(start, length);
        bool ok = true;
        for (Vertex w : anchors) {
          if (!touch(h, candidate, emb.images[w])) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        int max_load = 0, total = 0;
        for (Vertex x : candidate) {
          max_load = std::max(max_load, load[x]);
          total += load[x];
        }
        Score score{length, max_load, total, start};
        if (score < best_score) {
          best_score = score;
          best = std::move(candidate);
        }
      }
      if (!best.empty()) break;
    }
    // The whole cycle touches everything, so best is never empty here.
    for (Vertex x : best) ++load[x];
    emb.images[u] = std::move(best);
    placed[u] = 1;
  };

  for (Vertex root = 0; root < source.vertex_count(); ++root) {
    if (queued[root]) continue;
    std::queue<Vertex> frontier;
    frontier.push(root);
    queued[root] = 1;
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      place(u);
      for (int e : source.incident_edges(u)) {
        Vertex w = source.other_endpoint(e, u);
        if (!queued[w]) {
          queued[w] = 1;
          frontier.push(w);
        }
      }
    }
  }
  return emb;
}

}  // namespace vkred

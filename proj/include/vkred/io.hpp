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

// JSON instance files. Every document carries a "kind" field. Projection
// values are written 1-based (the range is {1..m}); vertices, symbols and
// items are 0-based. Knapsack costs and budgets are decimal strings.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vkred/csp.hpp"
#include "vkred/errors.hpp"
#include "vkred/graph.hpp"
#include "vkred/knapsack.hpp"
#include "vkred/numeric.hpp"
#include "vkred/vk_reduction.hpp"

namespace vkred {

using Json = nlohmann::ordered_json;

inline std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

inline Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline Json read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

inline void write_document(const std::string& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << dump_document(doc);
}

inline std::string document_kind(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw InputError("document has no \"kind\" field");
  return doc["kind"].get<std::string>();
}

// FNV-1a over the serialized document; identifies instances in reports.
inline std::string digest(const Json& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump_document(doc)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xF];
  return out;
}

namespace detail {

// Converts nlohmann type errors into InputError.
template <typename F>
auto guarded(const std::string& what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw InputError("bad " + what + " document: " + e.what());
  }
}

inline void expect_kind(const Json& doc, const std::string& kind) {
  if (document_kind(doc) != kind) throw InputError("expected a \"" + kind + "\" document, got \"" + document_kind(doc) + "\"");
}

inline Json edges_json(const Graph& g) {
  Json out = Json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

// Edges as listed in a file, plus the permutation that sorts them into the
// canonical order used by Graph and whether each was listed reversed.
struct ListedEdges {
  std::vector<Edge> edges;
  std::vector<std::size_t> order;  // order[k] = file position of canonical edge k
  std::vector<char> reversed;      // by file position
};

inline ListedEdges listed_edges(const Json& arr) {
  ListedEdges le;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of vertices");
    int u = e[0].get<int>(), v = e[1].get<int>();
    le.reversed.push_back(u > v);
    if (u > v) std::swap(u, v);
    le.edges.emplace_back(u, v);
  }
  le.order.resize(le.edges.size());
  std::iota(le.order.begin(), le.order.end(), std::size_t{0});
  std::sort(le.order.begin(), le.order.end(), [&](std::size_t a, std::size_t b) { return le.edges[a] < le.edges[b]; });
  return le;
}

inline Json projection_json(const std::vector<int>& zero_based) {
  Json out = Json::array();
  for (int v : zero_based) out.push_back(v + 1);
  return out;
}

inline std::vector<int> projection_from_json(const Json& arr) {
  std::vector<int> out;
  for (const auto& v : arr) out.push_back(v.get<int>() - 1);
  return out;
}

inline Json bigints_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const BigInt& v : values) out.push_back(to_decimal(v));
  return out;
}

inline std::vector<BigInt> bigints_from_json(const Json& arr) {
  std::vector<BigInt> out;
  for (const auto& v : arr) out.push_back(v.is_string() ? parse_decimal(v.get<std::string>()) : BigInt(v.get<long long>()));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// sat: clauses in DIMACS style (1-based variables, negative = negated).

inline Json to_json(const SatInstance& phi) {
  Json clauses = Json::array();
  for (const Clause& c : phi.clauses()) {
    Json lits = Json::array();
    for (const Literal& l : c) lits.push_back(l.negated ? -(l.variable + 1) : l.variable + 1);
    clauses.push_back(std::move(lits));
  }
  return Json{{"kind", "sat"},
              {"variables", phi.variable_count()},
              {"max_occurrence", phi.max_occurrence()},
              {"clauses", std::move(clauses)}};
}

inline SatInstance sat_from_json(const Json& doc) {
  detail::expect_kind(doc, "sat");
  return detail::guarded("sat", [&] {
    std::vector<Clause> clauses;
    for (const auto& c : doc.at("clauses")) {
      if (!c.is_array() || c.size() != 3) throw InputError("clause must have three literals");
      Clause clause;
      for (int t = 0; t < 3; ++t) {
        const int lit = c[t].get<int>();
        if (lit == 0) throw InputError("literal 0 is not allowed");
        clause[t] = Literal{std::abs(lit) - 1, lit < 0};
      }
      clauses.push_back(clause);
    }
    const int d = doc.contains("max_occurrence") ? doc["max_occurrence"].get<int>() : -1;
    return SatInstance(doc.at("variables").get<int>(), std::move(clauses), d);
  });
}

// ---------------------------------------------------------------------------
// csp2

inline Json to_json(const Csp2Instance& gamma) {
  Json constraints = Json::array();
  for (const auto& pairs : gamma.constraints()) {
    Json arr = Json::array();
    for (const auto& [a, b] : pairs) arr.push_back({a, b});
    constraints.push_back(std::move(arr));
  }
  return Json{{"kind", "csp2"},
              {"vertices", gamma.graph().vertex_count()},
              {"edges", detail::edges_json(gamma.graph())},
              {"alphabet", gamma.sigma_size()},
              {"constraints", std::move(constraints)}};
}

inline Csp2Instance csp2_from_json(const Json& doc) {
  detail::expect_kind(doc, "csp2");
  return detail::guarded("csp2", [&] {
    const auto le = detail::listed_edges(doc.at("edges"));
    const Json& cons = doc.at("constraints");
    if (cons.size() != le.edges.size()) throw InputError("one constraint list per edge required");
    std::vector<std::vector<std::pair<Symbol, Symbol>>> constraints;
    for (std::size_t pos : le.order) {
      std::vector<std::pair<Symbol, Symbol>> pairs;
      for (const auto& p : cons[pos]) {
        if (!p.is_array() || p.size() != 2) throw InputError("constraint entries must be symbol pairs");
        Symbol a = p[0].get<int>(), b = p[1].get<int>();
        if (le.reversed[pos]) std::swap(a, b);
        pairs.emplace_back(a, b);
      }
      constraints.push_back(std::move(pairs));
    }
    Graph h(doc.at("vertices").get<int>(), le.edges);
    return Csp2Instance(std::move(h), doc.at("alphabet").get<int>(), std::move(constraints));
  });
}

// ---------------------------------------------------------------------------
// rcsp: projections[e] = {"u": pi_{e,u}, "v": pi_{e,v}} for edge e = [u, v].

inline Json to_json(const RcspInstance& pi) {
  Json projections = Json::array();
  for (int e = 0; e < pi.graph().edge_count(); ++e) {
    projections.push_back(Json{{"u", detail::projection_json(pi.first_projections()[e])},
                               {"v", detail::projection_json(pi.second_projections()[e])}});
  }
  return Json{{"kind", "rcsp"},
              {"vertices", pi.graph().vertex_count()},
              {"edges", detail::edges_json(pi.graph())},
              {"alphabet", pi.sigma_size()},
              {"range", pi.upsilon_size()},
              {"projections", std::move(projections)}};
}

inline RcspInstance rcsp_from_json(const Json& doc) {
  detail::expect_kind(doc, "rcsp");
  return detail::guarded("rcsp", [&] {
    const auto le = detail::listed_edges(doc.at("edges"));
    const Json& proj = doc.at("projections");
    if (proj.size() != le.edges.size()) throw InputError("one projection pair per edge required");
    std::vector<std::vector<int>> first, second;
    for (std::size_t pos : le.order) {
      auto u = detail::projection_from_json(proj[pos].at("u"));
      auto v = detail::projection_from_json(proj[pos].at("v"));
      if (le.reversed[pos]) std::swap(u, v);
      first.push_back(std::move(u));
      second.push_back(std::move(v));
    }
    Graph g(doc.at("vertices").get<int>(), le.edges);
    return RcspInstance(std::move(g), doc.at("alphabet").get<int>(), doc.at("range").get<int>(), std::move(first),
                        std::move(second));
  });
}

// ---------------------------------------------------------------------------
// gcsp: per-vertex alphabets of symbol identifiers; projections aligned with them.

inline Json to_json(const GcspInstance& delta) {
  Json projections = Json::array();
  for (int h = 0; h < delta.graph().edge_count(); ++h) {
    projections.push_back(Json{{"u", detail::projection_json(delta.first_projections()[h])},
                               {"v", detail::projection_json(delta.second_projections()[h])}});
  }
  return Json{{"kind", "gcsp"},
              {"vertices", delta.graph().vertex_count()},
              {"edges", detail::edges_json(delta.graph())},
              {"alphabets", delta.alphabets()},
              {"range", delta.upsilon_size()},
              {"projections", std::move(projections)}};
}

inline GcspInstance gcsp_from_json(const Json& doc) {
  detail::expect_kind(doc, "gcsp");
  return detail::guarded("gcsp", [&] {
    const auto le = detail::listed_edges(doc.at("edges"));
    const Json& proj = doc.at("projections");
    if (proj.size() != le.edges.size()) throw InputError("one projection pair per edge required");
    std::vector<std::vector<int>> first, second;
    for (std::size_t pos : le.order) {
      auto u = detail::projection_from_json(proj[pos].at("u"));
      auto v = detail::projection_from_json(proj[pos].at("v"));
      if (le.reversed[pos]) std::swap(u, v);
      first.push_back(std::move(u));
      second.push_back(std::move(v));
    }
    Graph l(doc.at("vertices").get<int>(), le.edges);
    return GcspInstance(std::move(l), doc.at("alphabets").get<std::vector<std::vector<Symbol>>>(),
                        doc.at("range").get<int>(), std::move(first), std::move(second));
  });
}

// ---------------------------------------------------------------------------
// vk

inline Json to_json(const VkInstance& inst) {
  Json costs = Json::array();
  for (const auto& c : inst.costs()) costs.push_back(detail::bigints_json(c));
  return Json{{"kind", "vk"},
              {"dimensions", inst.dimensions()},
              {"profits", inst.profits()},
              {"costs", std::move(costs)},
              {"budget", detail::bigints_json(inst.budget())}};
}

inline VkInstance vk_from_json(const Json& doc) {
  detail::expect_kind(doc, "vk");
  return detail::guarded("vk", [&] {
    std::vector<CostVector> costs;
    for (const auto& c : doc.at("costs")) costs.push_back(detail::bigints_from_json(c));
    return VkInstance(doc.at("dimensions").get<int>(), doc.at("profits").get<std::vector<Profit>>(), std::move(costs),
                      detail::bigints_from_json(doc.at("budget")));
  });
}

// ---------------------------------------------------------------------------
// Audit record of the dimension-embedding reduction.

inline Json to_json(const EmbedReductionArtifacts& art, const RcspInstance& pi) {
  const int n = pi.graph().vertex_count();
  Json chunks = Json::array();
  for (const auto& chunk : art.chunks) {
    Json arr = Json::array();
    for (int id : chunk) {
      if (id < n) {
        arr.push_back(Json{{"vertex", id}, {"ord", art.ord[id]}});
      } else {
        const auto [u, v] = pi.graph().edge(id - n);
        arr.push_back(Json{{"edge", {u, v}}, {"ord", art.ord[id]}});
      }
    }
    chunks.push_back(std::move(arr));
  }
  return Json{{"kind", "embed-artifacts"}, {"F", art.F},     {"m", art.m},
              {"chunks", std::move(chunks)}, {"J", art.J},   {"N", art.N},
              {"Q", to_decimal(art.Q)},       {"M", to_decimal(art.M)}};
}

// ---------------------------------------------------------------------------
// Solutions and assignments.

inline Json to_json(const Solution& s) { return Json(s.chosen); }

inline Solution solution_from_json(const Json& arr) {
  return detail::guarded("solution", [&] { return Solution(arr.get<std::vector<std::size_t>>()); });
}

// Partial assignments: symbol per vertex, null for bottom.
inline Json to_json(const PartialAssignment& phi) {
  Json out = Json::array();
  for (Symbol s : phi.values) out.push_back(s == kUnassigned ? Json(nullptr) : Json(s));
  return out;
}

inline PartialAssignment assignment_from_json(const Json& arr) {
  return detail::guarded("assignment", [&] {
    PartialAssignment phi(arr.size());
    for (std::size_t v = 0; v < arr.size(); ++v)
      if (!arr[v].is_null()) phi.values[v] = arr[v].get<int>();
    return phi;
  });
}

}  // namespace vkred

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

#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "vkred/csp_chain.hpp"
#include "vkred/disperser.hpp"
#include "vkred/embedding.hpp"
#include "vkred/generate.hpp"
#include "vkred/sat_reduction.hpp"
#include "vkred/vk_reduction.hpp"

namespace vkred {
namespace {

Clause clause(int a, bool na, int b, bool nb, int c, bool nc) { return {Literal{a, na}, Literal{b, nb}, Literal{c, nc}}; }

RcspInstance swap_instance() { return RcspInstance(Graph(2, {{0, 1}}), 2, 2, {{0, 1}}, {{1, 0}}); }

// Reference sum over chosen items of a cost coordinate.
BigInt column_sum(const VkInstance& inst, const Solution& s, int j) {
  BigInt total = 0;
  for (std::size_t i : s.chosen) total += inst.cost(i)[j];
  return total;
}

// ---------------------------------------------------------------------------
// Clause-conflict graph and embeddings

TEST(ClauseConflictGraph, Examples) {
  const SatInstance disjoint(6, {clause(0, false, 1, false, 2, false), clause(3, false, 4, false, 5, false)});
  EXPECT_EQ(build_clause_conflict_graph(disjoint).edge_count(), 0);

  const SatInstance pair(5, {clause(0, false, 1, false, 2, false), clause(0, true, 3, false, 4, false)});
  const Graph g = build_clause_conflict_graph(pair);
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));

  const SatInstance tri(6, {clause(0, false, 1, false, 2, false), clause(0, false, 3, false, 4, false),
                            clause(1, false, 3, false, 5, false)});
  EXPECT_EQ(build_clause_conflict_graph(tri), complete_graph(3));
}

TEST(Embedding, ValidateExamples) {
  const Graph k4 = complete_graph(4);
  const EmbeddingCheck identity = validate_embedding({k4, k4, {{0}, {1}, {2}, {3}}});
  EXPECT_TRUE(identity.valid);
  EXPECT_EQ(identity.depth, 1);

  // Adjacent sources on non-touching targets of a path 0-1-2-3.
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_FALSE(validate_embedding({Graph(2, {{0, 1}}), path, {{0}, {3}}}).valid);
  // Disconnected image.
  EXPECT_FALSE(validate_embedding({Graph(1, {}), path, {{0, 2}}}).valid);

  const EmbeddingCheck stacked = validate_embedding({k4, k4, {{2}, {2}, {2}, {2}}});
  EXPECT_TRUE(stacked.valid);
  EXPECT_EQ(stacked.depth, 4);
}

TEST(Embedding, SimpleConnectedEmbeddingExamples) {
  const ConnectedEmbedding single = simple_connected_embedding(Graph(1, {}), 8);
  EXPECT_LE(single.target.vertex_count(), 8);
  EXPECT_TRUE(single.target.is_regular(3));
  EXPECT_EQ(single.images[0].size(), 1U);
  EXPECT_EQ(validate_embedding(single).depth, 1);

  const ConnectedEmbedding path = simple_connected_embedding(Graph(2, {{0, 1}}), 8);
  EXPECT_TRUE(validate_embedding(path).valid);
  EXPECT_EQ(path.images[0].size(), 1U);
  EXPECT_EQ(path.images[1].size(), 1U);

  const ConnectedEmbedding k4 = simple_connected_embedding(complete_graph(4), 8);
  const EmbeddingCheck check = validate_embedding(k4);
  EXPECT_TRUE(check.valid) << check.diagnostic;
  EXPECT_GE(check.depth, 1);
  EXPECT_TRUE(k4.target.is_regular(3));

  EXPECT_THROW(simple_connected_embedding(Graph(1, {}), 3), ConstructionError);
}

TEST(Embedding, RandomSourcesAlwaysValidate) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const Graph g = random_graph(rng.uniform_int(1, 12), 0.3, rng);
    const int k = rng.uniform_int(4, 12);
    const ConnectedEmbedding emb = simple_connected_embedding(g, k);
    const EmbeddingCheck check = validate_embedding(emb);
    EXPECT_TRUE(check.valid) << "seed " << seed << ": " << check.diagnostic;
    EXPECT_LE(emb.target.vertex_count(), k);
    EXPECT_TRUE(emb.target.is_regular(3));
  }
}

// ---------------------------------------------------------------------------
// Dispersers

// Test-side check: every r-subset of sets covers at least (1 - eps) m elements.
bool covers(const Disperser& d) {
  const int k = static_cast<int>(d.sets.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) != d.r) continue;
    std::set<int> u;
    for (int s = 0; s < k; ++s)
      if (mask >> s & 1U) u.insert(d.sets[s].begin(), d.sets[s].end());
    if (static_cast<double>(u.size()) < (1.0 - d.epsilon) * d.universe_size - 1e-9) return false;
  }
  return true;
}

TEST(Disperser, TrivialCases) {
  EXPECT_TRUE(verify_disperser({6, 2, 3, 0.0, {{0, 1}, {2, 3}, {4, 5}}}));
  const Disperser whole = build_disperser(7, 1, 7, 1, 0.5, 3);
  EXPECT_EQ(whole.sets, (std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5, 6}}));
  EXPECT_FALSE(verify_disperser({6, 2, 3, 0.0, {{0, 1}, {2, 3}, {2, 5}}}));
}

TEST(Disperser, DeterministicGivenSeed) {
  auto attempt = [](std::uint64_t seed) -> std::optional<Disperser> {
    try {
      return build_disperser(12, 6, 6, 3, 0.25, seed);
    } catch (const ConstructionError&) {
      return std::nullopt;
    }
  };
  for (std::uint64_t seed : {1ULL, 17ULL, 99ULL}) {
    const auto a = attempt(seed), b = attempt(seed);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (!a) continue;
    EXPECT_EQ(a->sets, b->sets);
    EXPECT_TRUE(covers(*a));
    for (const auto& s : a->sets) EXPECT_EQ(s.size(), 6U);
  }
}

TEST(Disperser, VerifierAgreesWithTestOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    Disperser d{10, 4, rng.uniform_int(1, 4), 0.3, {}};
    for (int s = 0; s < 4; ++s) {
      std::vector<int> set;
      for (int e = 0; e < 10; ++e)
        if (rng.bernoulli(0.4)) set.push_back(e);
      d.sets.push_back(set);
    }
    EXPECT_EQ(verify_disperser(d), covers(d)) << "seed " << seed;
  }
}

// ---------------------------------------------------------------------------
// 3-SAT -> R-CSP

TEST(SatToRcsp, SingleVertexSatisfiable) {
  const SatInstance phi(4, {clause(0, false, 1, false, 2, false), clause(1, true, 2, false, 3, true)});
  const SatReduction red = sat_to_rcsp(phi, Graph(1, {}), {{0, 1}});
  EXPECT_EQ(par_bruteforce(red.instance).size, 1);
  EXPECT_TRUE(red.warnings.empty());
}

TEST(SatToRcsp, AllSignPatternsOnAnEdge) {
  std::vector<Clause> all;
  for (int signs = 0; signs < 8; ++signs) all.push_back(clause(0, signs & 1, 1, signs & 2, 2, signs & 4));
  const SatInstance phi(3, all);
  const std::vector<std::vector<int>> sets{{0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}};
  const SatReduction red = sat_to_rcsp(phi, Graph(2, {{0, 1}}), sets);

  // Test-side: count pairs of local assignments, each satisfying its clause
  // set, that agree on the shared variables (here all three).
  auto satisfies = [&](int mask, const std::vector<int>& cs) {
    std::vector<bool> s{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
    for (int c : cs)
      if (!clause_satisfied(phi.clause(c), s)) return false;
    return true;
  };
  int agreeing = 0, left = 0, right = 0;
  for (int a = 0; a < 8; ++a) {
    left += satisfies(a, sets[0]);
    right += satisfies(a, sets[1]);
    agreeing += satisfies(a, sets[0]) && satisfies(a, sets[1]);
  }
  ASSERT_GT(left, 0);
  ASSERT_GT(right, 0);
  const int expected = agreeing > 0 ? 2 : 1;
  EXPECT_EQ(expected, 1);
  EXPECT_EQ(par_bruteforce(red.instance).size, expected);
}

TEST(SatToRcsp, UnsatisfiableClauseSetWarns) {
  std::vector<Clause> all;
  for (int signs = 0; signs < 8; ++signs) all.push_back(clause(0, signs & 1, 1, signs & 2, 2, signs & 4));
  // Vertex 0 has no satisfying local assignment; its padding symbol projects
  // to a sentinel, so it can never be assigned together with vertex 1.
  const SatReduction red = sat_to_rcsp(SatInstance(3, all), Graph(2, {{0, 1}}), {{0, 1, 2, 3, 4, 5, 6, 7}, {0}});
  EXPECT_EQ(red.warnings.size(), 1U);
  EXPECT_EQ(par_bruteforce(red.instance).size, 1);
}

TEST(SatToRcsp, PlantedAssignmentProjectsToFullPar) {
  EnumerationCaps caps;
  caps.partial_assignments = UINT64_MAX;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(seed);
    const PlantedSat p = planted_sat(rng.uniform_int(5, 9), rng.uniform_int(3, 8), 3, rng);
    const SatEmbeddingRoute route = sat_to_rcsp_embedding_route(p.instance, 6);
    const PartialAssignment phi = rcsp_assignment_from_sat(route.reduction, p.planted);
    EXPECT_TRUE(phi.total());
    EXPECT_TRUE(is_consistent(route.reduction.instance, phi)) << "seed " << seed;
    EXPECT_EQ(par_bruteforce(route.reduction.instance, caps).size, route.reduction.instance.graph().vertex_count());
  }
}

TEST(SatToRcsp, DisperserRouteFullPar) {
  EnumerationCaps caps;
  caps.partial_assignments = UINT64_MAX;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Rng rng(seed);
    const PlantedSat p = planted_sat(8, 8, 3, rng);
    const int m = p.instance.clause_count();
    const SatDisperserRoute route = sat_to_rcsp_disperser_route(p.instance, 4, 2, 0.5, seed, (m + 1) / 2);
    EXPECT_TRUE(covers(route.disperser));
    EXPECT_EQ(par_bruteforce(route.reduction.instance, caps).size, 4);
  }
}

// ---------------------------------------------------------------------------
// 2-CSP -> G-CSP -> R-CSP

TEST(CspChain, LineGraphOfK4) {
  Rng rng(3);
  const Csp2Instance gamma = random_csp2(complete_graph(4), 2, 0.5, true, rng);
  const GcspInstance delta = csp2_to_gcsp(gamma);
  // Test-side count: pairs of K4 edges sharing one endpoint.
  const Graph k4 = complete_graph(4);
  const auto& edges = k4.edges();
  int adjacent = 0;
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      adjacent += edges[a].first == edges[b].first || edges[a].first == edges[b].second ||
                  edges[a].second == edges[b].first || edges[a].second == edges[b].second;
  EXPECT_EQ(delta.graph().vertex_count(), 6);
  EXPECT_EQ(delta.graph().edge_count(), adjacent);
  EXPECT_EQ(adjacent, 12);
  EXPECT_EQ(csp2_to_rcsp(gamma).instance().graph().vertex_count(), 6);
}

TEST(CspChain, RequiresThreeRegular) {
  const Csp2Instance path(Graph(3, {{0, 1}, {1, 2}}), 2, {{{0, 0}}, {{0, 0}}});
  EXPECT_THROW(csp2_to_gcsp(path), PreconditionError);
}

TEST(CspChain, SingleVertexGcspKeepsPar) {
  const GcspInstance single(Graph(1, {}), {{4, 9}}, 1, {}, {});
  const GcspToRcsp bridge = gcsp_to_rcsp(single);
  EXPECT_EQ(par_bruteforce(bridge.instance).size, 1);
}

TEST(CspChain, SatisfiableK4GivesFullPar) {
  EnumerationCaps caps;
  caps.partial_assignments = UINT64_MAX;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const Csp2Instance gamma = random_csp2(complete_graph(4), 2, 0.3, true, rng);
    ASSERT_EQ(csp_opt_bruteforce(gamma).value, 6);
    const Csp2ToRcsp chain = csp2_to_rcsp(gamma);
    EXPECT_EQ(par_bruteforce(chain.instance(), caps).size, 6);
    const PartialAssignment lifted = rcsp_assignment_from_csp2(gamma, chain, csp_opt_bruteforce(gamma).assignment);
    EXPECT_TRUE(is_consistent(chain.instance(), lifted));
  }
}

// ---------------------------------------------------------------------------
// R-CSP -> VK, simple

TEST(SimpleReduction, Dimensions) {
  const VkInstance vk = rcsp_to_vk_simple(swap_instance());
  EXPECT_EQ(vk.dimensions(), 4);
  EXPECT_EQ(vk.item_count(), 4U);
}

TEST(SimpleReduction, Completeness) {
  const RcspInstance pi = swap_instance();
  const PartialAssignment phi(std::vector<Symbol>{0, 1});
  const Solution s = vk_solution_from_assignment(pi, phi, SimpleVariant{});
  const VkInstance vk = rcsp_to_vk_simple(pi);
  EXPECT_TRUE(check_feasible(vk, s));
  EXPECT_EQ(profit(vk, s), 2);
  EXPECT_EQ(extract_partial_assignment(pi, SimpleVariant{}, s), phi);
}

TEST(SimpleReduction, RejectsBadAssignments) {
  const RcspInstance pi = swap_instance();
  EXPECT_THROW(vk_solution_from_assignment(pi, PartialAssignment(std::vector<Symbol>{0, kUnassigned})),
               PreconditionError);
  EXPECT_THROW(vk_solution_from_assignment(pi, PartialAssignment(std::vector<Symbol>{0, 0})), PreconditionError);
}

TEST(SimpleReduction, ExtractionRejectsInfeasible) {
  const RcspInstance pi = swap_instance();
  EXPECT_THROW(extract_partial_assignment(pi, SimpleVariant{}, Solution({0, 1})), PreconditionError);
}

// ---------------------------------------------------------------------------
// R-CSP -> VK, dimension embedding

RcspInstance k4_instance(int sigma, int m, std::uint64_t seed) {
  Rng rng(seed);
  return random_rcsp(complete_graph(4), sigma, m, rng);
}

TEST(EmbedReduction, LargeChunk) {
  const EmbedReduction red = rcsp_to_vk_embed(k4_instance(2, 2, 1), 10);
  EXPECT_EQ(red.artifacts.chunk_count(), 1);
  EXPECT_EQ(red.instance.dimensions(), 2);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(red.artifacts.J[0][v], 4);
  EXPECT_EQ(red.artifacts.N[0], 16);
}

TEST(EmbedReduction, QAndM) {
  const EmbedReduction red = rcsp_to_vk_embed(k4_instance(2, 2, 2), 1);
  EXPECT_EQ(red.artifacts.Q, 48);
  EXPECT_EQ(red.artifacts.M, 2304);
  EXPECT_EQ(red.instance.dimensions(), 2 * 10);
}

TEST(EmbedReduction, DimensionFormula) {
  for (int F = 1; F <= 12; ++F) {
    const EmbedReduction red = rcsp_to_vk_embed(k4_instance(2, 3, 3), F);
    EXPECT_EQ(red.instance.dimensions(), 2 * ((4 + 6 + F - 1) / F)) << "F " << F;
    int total = 0;
    for (int n : red.artifacts.N) total += n;
    EXPECT_EQ(total, 4 + 2 * 6);
  }
}

TEST(EmbedReduction, Preconditions) {
  EXPECT_THROW(rcsp_to_vk_embed(swap_instance(), 1), PreconditionError);
  EXPECT_THROW(rcsp_to_vk_embed(k4_instance(2, 2, 1), 0), PreconditionError);
}

TEST(EmbedReduction, CompletenessAndTightWeights) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const PlantedRcsp p = planted_rcsp(complete_graph(4), 2, 2, rng);
    for (int F : {1, 2, 4}) {
      const EmbedReduction red = rcsp_to_vk_embed(p.instance, F);
      const Solution s = vk_solution_from_assignment(p.instance, p.planted, EmbedVariant{F});
      EXPECT_TRUE(check_feasible(red.instance, s));
      EXPECT_EQ(profit(red.instance, s), 4 + 2 * 6);
      // Every constraint weight sums to m exactly.
      for (int j = 0; j < 4 + 6; ++j) {
        BigInt w = 0;
        for (std::size_t i : s.chosen) w += constraint_weight(p.instance, j, static_cast<Vertex>(i / 2), i % 2);
        EXPECT_EQ(w, 2) << "constraint " << j;
      }
      EXPECT_EQ(extract_embed(p.instance, red.artifacts, red.instance, s), p.planted);
    }
  }
}

TEST(EmbedReduction, EmptySolutionExtractsNothing) {
  const RcspInstance pi = k4_instance(2, 2, 4);
  const EmbedReduction red = rcsp_to_vk_embed(pi, 2);
  const PartialAssignment phi = extract_embed(pi, red.artifacts, red.instance, Solution{});
  EXPECT_EQ(phi.size(), 0);
  EXPECT_TRUE(is_consistent(pi, phi));
  EXPECT_LE(embed_extraction_bound(pi, 2, 0), 0);
}

TEST(EmbedReduction, ChunkSumIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const RcspInstance pi = random_rcsp(complete_graph(4), 2, 3, rng);
    const EmbedReduction red = rcsp_to_vk_embed(pi, 3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < red.instance.item_count(); ++i)
        if (rng.bernoulli(0.4)) chosen.push_back(i);
      const Solution s(chosen);
      for (int l = 0; l < red.artifacts.chunk_count(); ++l) {
        BigInt j_sum = 0;
        for (std::size_t i : s.chosen) j_sum += red.artifacts.J[l][i / 2];
        EXPECT_EQ(column_sum(red.instance, s, 2 * l) + column_sum(red.instance, s, 2 * l + 1), red.artifacts.M * j_sum);
      }
    }
  }
}

TEST(EmbedReduction, SoundnessOverAllFeasibleSubsets) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const RcspInstance pi = k4_instance(2, 2, seed + 100);
    for (int F : {1, 2}) {
      const EmbedReduction red = rcsp_to_vk_embed(pi, F);
      for (std::uint64_t mask = 0; mask < 256; ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < 8; ++i)
          if (mask >> i & 1U) chosen.push_back(i);
        const Solution s(chosen);
        if (!check_feasible(red.instance, s)) continue;
        const PartialAssignment phi = extract_embed(pi, red.artifacts, red.instance, s);
        EXPECT_TRUE(is_consistent(pi, phi));
        EXPECT_GE(phi.size(), embed_extraction_bound(pi, F, profit(red.instance, s)));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Base-Q digits

TEST(BaseQ, Examples) {
  EXPECT_TRUE(verify_base_q_digits({3, 3, 3}, 7, 3));
  EXPECT_TRUE(verify_base_q_digits({4, 2, 3}, 7, 3));
  EXPECT_NE(base_q_value({4, 2, 3}, 7), base_q_value({3, 3, 3}, 7));
  EXPECT_THROW(verify_base_q_digits({7}, 7, 3), InputError);
}

TEST(BaseQ, ExhaustiveSmallBases) {
  for (int q = 2; q <= 5; ++q) {
    for (int a = 0; a < q; ++a) {
      for (int code = 0; code < q * q * q; ++code) {
        const std::vector<BigInt> digits{code % q, code / q % q, code / (q * q)};
        EXPECT_TRUE(verify_base_q_digits(digits, q, a));
      }
    }
  }
}

}  // namespace
}  // namespace vkred

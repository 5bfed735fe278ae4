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

#include <cmath>
#include <cstdint>
#include <vector>

#include "vkred/approx.hpp"
#include "vkred/discretize.hpp"
#include "vkred/generate.hpp"
#include "vkred/lp.hpp"

namespace vkred {
namespace {

VkInstance vk1(std::vector<Profit> p, std::vector<long long> c, long long b) {
  std::vector<CostVector> costs;
  for (long long x : c) costs.push_back({BigInt(x)});
  return VkInstance(1, std::move(p), std::move(costs), {BigInt(b)});
}

// Test-side LP oracle for two variables: the optimum of a bounded LP is
// attained at a vertex, and every vertex is the intersection of two tight
// constraints among A x <= B, 0 <= x <= 1.
Rational lp2_by_vertices(const VkInstance& inst) {
  struct Line {
    Rational a, b, rhs;
  };
  std::vector<Line> lines{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  for (int j = 0; j < inst.dimensions(); ++j)
    lines.push_back({Rational(inst.cost(0)[j]), Rational(inst.cost(1)[j]), Rational(inst.budget()[j])});
  Rational best = -1;
  for (std::size_t s = 0; s < lines.size(); ++s) {
    for (std::size_t t = s + 1; t < lines.size(); ++t) {
      const Rational det = lines[s].a * lines[t].b - lines[s].b * lines[t].a;
      if (det == 0) continue;
      const Rational x = (lines[s].rhs * lines[t].b - lines[s].b * lines[t].rhs) / det;
      const Rational y = (lines[s].a * lines[t].rhs - lines[s].rhs * lines[t].a) / det;
      bool ok = x >= 0 && y >= 0 && x <= 1 && y <= 1;
      for (int j = 0; j < inst.dimensions() && ok; ++j)
        ok = Rational(inst.cost(0)[j]) * x + Rational(inst.cost(1)[j]) * y <= Rational(inst.budget()[j]);
      if (ok) best = std::max(best, Rational(inst.profit(0)) * x + Rational(inst.profit(1)) * y);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Boundedness

TEST(Boundedness, Boundaries) {
  const BoundednessSplit zero = split_by_boundedness(vk1({1, 1}, {0, 0}, 10));
  EXPECT_EQ(zero.bounded.size(), 2U);
  EXPECT_TRUE(zero.unbounded.empty());

  const VkInstance inst = vk1({1, 1, 1}, {10, 5, 6}, 10);
  EXPECT_FALSE(is_two_bounded(inst, 0));
  EXPECT_TRUE(is_two_bounded(inst, 1));
  EXPECT_FALSE(is_two_bounded(inst, 2));
}

// ---------------------------------------------------------------------------
// Geometric rounding

TEST(Discretize, VarpiExamples) {
  const Gamma g = Gamma::for_dimensions(1);
  EXPECT_EQ(g.value(), Rational(11, 10));
  EXPECT_EQ(varpi_down(0, g), 0);
  EXPECT_EQ(varpi_up(0, g), 0);
  EXPECT_EQ(varpi_down(1, g), 1);
  EXPECT_EQ(varpi_up(1, g), 1);

  // Test-side: locate 2 between consecutive powers by repeated multiplication.
  Rational p = 1;
  int t = 0;
  while (p < 2) {
    p *= Rational(11, 10);
    ++t;
  }
  EXPECT_EQ(t, 8);
  EXPECT_LT(p / Rational(11, 10), 2);
  EXPECT_EQ(varpi_up(2, g), p);
  EXPECT_EQ(varpi_down(2, g), p / Rational(11, 10));
  EXPECT_THROW(varpi_up(-1, g), InputError);
}

TEST(Discretize, VarpiBoundsProperty) {
  for (int d = 1; d <= 5; ++d) {
    const Gamma g = Gamma::for_dimensions(d);
    for (int x = 1; x <= 300; ++x) {
      EXPECT_LE(varpi_down(x, g), x);
      EXPECT_GE(varpi_up(x, g), x);
      EXPECT_LT(varpi_up(x, g), g.value() * x);
      EXPECT_GT(varpi_down(x, g) * g.value(), x);
    }
  }
}

TEST(Discretize, DigammaExamples) {
  const Gamma g = Gamma::for_dimensions(2);
  const DiscretizedCost zero = digamma({0, 0}, {5, 9}, g);
  EXPECT_EQ(zero.keys, (std::vector<BucketKey>{{BucketKind::Zero, 0}, {BucketKind::Zero, 0}}));
  EXPECT_EQ(zero.values, (std::vector<Rational>{0, 0}));

  // x = B: the complement branch gives exactly B, never more than up.
  const DiscretizedCost full = digamma({9}, {9}, Gamma::for_dimensions(1));
  EXPECT_LE(full.values[0], Rational(9) * Rational(11, 10));
  EXPECT_GE(full.values[0], 9);
  EXPECT_EQ(full.values[0], 9);

  EXPECT_EQ(digamma({3, 4}, {5, 9}, g), digamma({3, 4}, {5, 9}, g));
  EXPECT_THROW(digamma({6}, {5}, g), InputError);
}

TEST(Discretize, DigammaBoundsProperty) {
  for (int d = 1; d <= 3; ++d) {
    const Gamma g = Gamma::for_dimensions(d);
    for (int b = 1; b <= 60; ++b) {
      for (int x = 0; x <= b; ++x) {
        const Rational v = digamma({x}, {b}, g).values[0];
        EXPECT_GE(v, x);
        EXPECT_LE(v, g.value() * x);
        EXPECT_LE(v, b - Rational(b - x) / g.value());
      }
    }
  }
}

TEST(Discretize, PruneExamples) {
  const Gamma g = Gamma::for_dimensions(1);
  const VkInstance distinct = vk1({1, 1, 1}, {1, 5, 10}, 10);
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(prune_by_discretization(distinct, all, g), all);

  const VkInstance twins = vk1({3, 5}, {4, 4}, 10);
  EXPECT_EQ(prune_by_discretization(twins, std::vector<std::size_t>{0, 1}, g), (std::vector<std::size_t>{1}));

  const VkInstance equal = vk1({4, 4}, {7, 7}, 10);
  EXPECT_EQ(prune_by_discretization(equal, std::vector<std::size_t>{0, 1}, g), (std::vector<std::size_t>{0}));
}

// ---------------------------------------------------------------------------
// LP relaxation

TEST(Lp, Examples) {
  const LpResult empty = lp_solve_relaxation(vk1({}, {}, 5));
  EXPECT_EQ(empty.value, 0);
  EXPECT_TRUE(empty.x.empty());

  const LpResult single = lp_solve_relaxation(vk1({4}, {3}, 5));
  EXPECT_EQ(single.x, (std::vector<Rational>{1}));

  // c = (2, 3), p = (3, 4), B = 4: x = (1, 2/3) gives 3 + 8/3 = 17/3.
  const VkInstance two = vk1({3, 4}, {2, 3}, 4);
  const LpResult lp = lp_solve_relaxation(two);
  EXPECT_EQ(lp2_by_vertices(two), Rational(17, 3));
  EXPECT_EQ(lp.value, Rational(17, 3));
  EXPECT_EQ(lp.x, (std::vector<Rational>{1, Rational(2, 3)}));
  EXPECT_GE(lp.value, solve_bruteforce(two).value);
  EXPECT_EQ(solve_bruteforce(two).value, 4);
}

TEST(Lp, MatchesVertexEnumerationOnTwoItems) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const VkInstance inst = random_vk(2, rng.uniform_int(1, 3), 20, 15, rng);
    EXPECT_EQ(lp_solve_relaxation(inst).value, lp2_by_vertices(inst)) << "seed " << seed;
  }
}

TEST(Lp, RelaxationBoundsIntegerOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const VkInstance inst = random_vk(rng.uniform_int(0, 9), rng.uniform_int(1, 3), 25, 12, rng);
    const LpResult lp = lp_solve_relaxation(inst);
    EXPECT_GE(lp.value, solve_bruteforce(inst).value);
    Rational check = 0;
    for (std::size_t i = 0; i < inst.item_count(); ++i) {
      EXPECT_GE(lp.x[i], 0);
      EXPECT_LE(lp.x[i], 1);
      check += lp.x[i] * inst.profit(i);
    }
    EXPECT_EQ(check, lp.value);
    for (int j = 0; j < inst.dimensions(); ++j) {
      Rational load = 0;
      for (std::size_t i = 0; i < inst.item_count(); ++i) load += lp.x[i] * Rational(inst.cost(i)[j]);
      EXPECT_LE(load, Rational(inst.budget()[j]));
    }
  }
}

TEST(Lp, RespectsCap) {
  EnumerationCaps caps;
  caps.lp_variables = 1;
  EXPECT_THROW(lp_solve_relaxation(vk1({1, 1}, {1, 1}, 2), caps), SizeError);
}

// ---------------------------------------------------------------------------
// Approximation algorithms

TEST(Approx, RoundingScale) {
  EXPECT_EQ(rounding_scale(0), 1.0);
  EXPECT_DOUBLE_EQ(rounding_scale(1), 0.25);
  EXPECT_DOUBLE_EQ(rounding_scale(4), 0.125);
}

TEST(Approx, SingleItem) {
  const VkInstance one = vk1({7}, {9}, 10);
  EXPECT_EQ(approx_2unbounded(one), Solution({0}));
  const VkInstance small = vk1({7}, {2}, 10);
  EXPECT_EQ(approx_lp_rounding(small, 1), Solution({0}));
}

TEST(Approx, UnboundedFeasibleSetsAreSmall) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const int d = rng.uniform_int(1, 4);
    const VkInstance inst = random_unbounded_vk(10, d, 50, 30, rng);
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < 10; ++i)
        if (mask >> i & 1U) chosen.push_back(i);
      const Solution s(chosen);
      if (check_feasible(inst, s)) EXPECT_LE(s.size(), static_cast<std::size_t>(d));
    }
  }
}

TEST(Approx, UnboundedBranchGuarantee) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const int d = rng.uniform_int(1, 4);
    const VkInstance inst = random_unbounded_vk(rng.uniform_int(1, 12), d, 50, 30, rng);
    const Solution s = approx_2unbounded(inst);
    ASSERT_TRUE(check_feasible(inst, s));
    const Profit opt = solve_bruteforce(inst).value;
    EXPECT_GE(10.0 * std::sqrt(double(d)) * double(profit(inst, s)), double(opt)) << "seed " << seed;
  }
}

TEST(Approx, CombinedDispatch) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const VkInstance un = random_unbounded_vk(8, 3, 40, 20, rng);
    EXPECT_EQ(approx_sqrt_d(un, seed), approx_2unbounded(un));
    const VkInstance bd = random_mixed_vk(8, 3, 40, 20, 1.0, rng);
    EXPECT_EQ(approx_sqrt_d(bd, seed), approx_lp_rounding(bd, seed));
  }
}

TEST(Approx, CombinedIsFeasibleAndBeatsSingletons) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const VkInstance inst = random_mixed_vk(rng.uniform_int(1, 12), rng.uniform_int(1, 4), 60, 25, 0.5, rng);
    const Solution s = approx_sqrt_d(inst, seed);
    ASSERT_TRUE(check_feasible(inst, s));
    for (std::size_t i = 0; i < inst.item_count(); ++i)
      if (check_feasible(inst, Solution({i}))) EXPECT_GE(profit(inst, s), inst.profit(i));
    EXPECT_EQ(approx_sqrt_d(inst, seed), s);
  }
}

}  // namespace
}  // namespace vkred

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
#include <span>
#include <vector>

#include "vkred/caps.hpp"
#include "vkred/discretize.hpp"
#include "vkred/knapsack.hpp"
#include "vkred/lp.hpp"
#include "vkred/rng.hpp"

namespace vkred {

struct BoundednessSplit {
  std::vector<std::size_t> bounded;    // 2 c_ij <= B_j for every j
  std::vector<std::size_t> unbounded;  // 2 c_ij > B_j for some j
};

inline bool is_two_bounded(const VkInstance& inst, std::size_t i) {
  for (int j = 0; j < inst.dimensions(); ++j)
    if (2 * inst.cost(i)[j] > inst.budget()[j]) return false;
  return true;
}

inline BoundednessSplit split_by_boundedness(const VkInstance& inst) {
  BoundednessSplit split;
  for (std::size_t i = 0; i < inst.item_count(); ++i)
    (is_two_bounded(inst, i) ? split.bounded : split.unbounded).push_back(i);
  return split;
}

// ---------------------------------------------------------------------------
// Unbounded branch: discretize, prune, then enumerate subsets of size <= d
// with the original costs.

inline Solution approx_2unbounded(const VkInstance& inst, std::span<const std::size_t> items,
                                  const EnumerationCaps& caps = {}) {
  const int d = inst.dimensions();
  std::vector<std::size_t> fitting;
  for (std::size_t i : items) {
    if (i >= inst.item_count()) throw InputError("unknown item index " + std::to_string(i));
    if (check_feasible(inst, Solution({i}))) fitting.push_back(i);
  }
  if (fitting.empty()) return {};
  if (d == 0) return solve_bruteforce_bounded_size(inst, fitting, fitting.size(), caps).solution;
  const Gamma gamma = Gamma::for_dimensions(d);
  const auto kept = prune_by_discretization(inst, fitting, gamma);
  return solve_bruteforce_bounded_size(inst, kept, static_cast<std::size_t>(d), caps).solution;
}

inline Solution approx_2unbounded(const VkInstance& inst, const EnumerationCaps& caps = {}) {
  const auto items = detail::all_items(inst);
  return approx_2unbounded(inst, items, caps);
}

// ---------------------------------------------------------------------------
// Bounded branch: LP relaxation, scaled independent rounding, greedy repair.

inline constexpr int kRoundingTrials = 32;

inline double rounding_scale(int d) { return d <= 0 ? 1.0 : std::min(1.0, 1.0 / (4.0 * std::sqrt(double(d)))); }

namespace detail {

// Drops chosen items until s is feasible. Each round removes the item with
// the smallest profit per unit of violation, where an item's violation is
// sum over violated coordinates j of c_ij / max(B_j, 1); ties go to the
// smaller index.
inline void repair(const VkInstance& inst, std::vector<std::size_t>& chosen) {
  const int d = inst.dimensions();
  while (true) {
    CostVector total(d, 0);
    for (std::size_t i : chosen)
      for (int j = 0; j < d; ++j) total[j] += inst.cost(i)[j];
    std::vector<int> violated;
    for (int j = 0; j < d; ++j)
      if (total[j] > inst.budget()[j]) violated.push_back(j);
    if (violated.empty()) return;
    std::size_t worst = chosen.size();
    Rational worst_ratio = 0;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      Rational violation = 0;
      for (int j : violated)
        violation += Rational(inst.cost(chosen[k])[j], std::max(inst.budget()[j], BigInt(1)));
      if (violation == 0) continue;
      const Rational ratio = Rational(inst.profit(chosen[k])) / violation;
      if (worst == chosen.size() || ratio < worst_ratio) {
        worst = k;
        worst_ratio = ratio;
      }
    }
    chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(worst));
  }
}

}  // namespace detail

inline Solution approx_lp_rounding(const VkInstance& inst, std::span<const std::size_t> items, std::uint64_t seed,
                                   const EnumerationCaps& caps = {}) {
  Solution best;
  Profit best_profit = 0;
  auto consider = [&](Solution s) {
    const Profit p = profit(inst, s);
    if (p > best_profit) {
      best_profit = p;
      best = std::move(s);
    }
  };
  for (std::size_t i : items)
    if (check_feasible(inst, Solution({i}))) consider(Solution({i}));
  if (items.empty()) return best;

  const LpResult lp = lp_solve_relaxation(inst, items, caps);
  const double theta = rounding_scale(inst.dimensions());
  for (int trial = 0; trial < kRoundingTrials; ++trial) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < items.size(); ++k) {
      const double p = theta * lp.x[k].convert_to<double>();
      if (rng.bernoulli(p)) chosen.push_back(items[k]);
    }
    std::sort(chosen.begin(), chosen.end());
    detail::repair(inst, chosen);
    consider(Solution(std::move(chosen)));
  }
  return best;
}

inline Solution approx_lp_rounding(const VkInstance& inst, std::uint64_t seed, const EnumerationCaps& caps = {}) {
  const auto items = detail::all_items(inst);
  return approx_lp_rounding(inst, items, seed, caps);
}

// ---------------------------------------------------------------------------
// Combined algorithm: run each branch on its part of the split and keep the
// more profitable answer (ties go to the unbounded branch).

inline Solution approx_sqrt_d(const VkInstance& inst, std::uint64_t seed, const EnumerationCaps& caps = {}) {
  const BoundednessSplit split = split_by_boundedness(inst);
  if (split.unbounded.empty()) return approx_lp_rounding(inst, split.bounded, seed, caps);
  if (split.bounded.empty()) return approx_2unbounded(inst, split.unbounded, caps);
  Solution lp = approx_lp_rounding(inst, split.bounded, seed, caps);
  Solution un = approx_2unbounded(inst, split.unbounded, caps);
  return profit(inst, lp) > profit(inst, un) ? lp : un;
}

}  // namespace vkred

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

// d-dimensional (vector) knapsack: instance model, feasibility, and the two
// exact solvers used as oracles (subset enumeration and a dynamic program
// over the budget lattice).

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vkred/caps.hpp"
#include "vkred/errors.hpp"
#include "vkred/numeric.hpp"

namespace vkred {

using Profit = std::int64_t;
using CostVector = std::vector<BigInt>;

class VkInstance {
 public:
  VkInstance() = default;

  VkInstance(int dimensions, std::vector<Profit> profits, std::vector<CostVector> costs, CostVector budget)
      : dimensions_(dimensions), profits_(std::move(profits)), costs_(std::move(costs)), budget_(std::move(budget)) {
    detail::require<InputError>(dimensions >= 0, "negative dimension count");
    detail::require<InputError>(profits_.size() == costs_.size(), "profit and cost lists differ in length");
    detail::require<InputError>(static_cast<int>(budget_.size()) == dimensions, "budget length != d");
    for (const BigInt& b : budget_) detail::require<InputError>(b >= 0, "negative budget");
    for (std::size_t i = 0; i < costs_.size(); ++i) {
      detail::require<InputError>(profits_[i] >= 0, "negative profit");
      detail::require<InputError>(static_cast<int>(costs_[i].size()) == dimensions,
                                  "cost vector of item " + std::to_string(i) + " has length != d");
      for (const BigInt& c : costs_[i]) detail::require<InputError>(c >= 0, "negative cost");
    }
  }

  int dimensions() const { return dimensions_; }
  std::size_t item_count() const { return profits_.size(); }
  Profit profit(std::size_t item) const { return profits_.at(item); }
  const std::vector<Profit>& profits() const { return profits_; }
  const CostVector& cost(std::size_t item) const { return costs_.at(item); }
  const std::vector<CostVector>& costs() const { return costs_; }
  const CostVector& budget() const { return budget_; }

  // Copy of this instance with the budget replaced (negative controls use this).
  VkInstance with_budget(CostVector budget) const {
    return VkInstance(dimensions_, profits_, costs_, std::move(budget));
  }

  friend bool operator==(const VkInstance&, const VkInstance&) = default;

 private:
  int dimensions_ = 0;
  std::vector<Profit> profits_;
  std::vector<CostVector> costs_;
  CostVector budget_;
};

// A candidate subset of items; feasibility is checked, not enforced.
struct Solution {
  std::vector<std::size_t> chosen;  // sorted, duplicate-free

  Solution() = default;
  explicit Solution(std::vector<std::size_t> items) : chosen(std::move(items)) {
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  }

  std::size_t size() const { return chosen.size(); }
  bool contains(std::size_t item) const { return std::binary_search(chosen.begin(), chosen.end(), item); }
  friend bool operator==(const Solution&, const Solution&) = default;
};

inline void check_items(const VkInstance& inst, const Solution& s) {
  for (std::size_t i : s.chosen) {
    if (i >= inst.item_count()) throw InputError("unknown item index " + std::to_string(i));
  }
}

// Total cost of s in every coordinate.
inline CostVector load(const VkInstance& inst, const Solution& s) {
  check_items(inst, s);
  CostVector total(inst.dimensions(), 0);
  for (std::size_t i : s.chosen)
    for (int j = 0; j < inst.dimensions(); ++j) total[j] += inst.cost(i)[j];
  return total;
}

inline bool check_feasible(const VkInstance& inst, const Solution& s) {
  const CostVector total = load(inst, s);
  for (int j = 0; j < inst.dimensions(); ++j)
    if (total[j] > inst.budget()[j]) return false;
  return true;
}

inline Profit profit(const VkInstance& inst, const Solution& s) {
  check_items(inst, s);
  Profit total = 0;
  for (std::size_t i : s.chosen) total += inst.profit(i);
  return total;
}

// W(I): the largest budget coordinate.
inline BigInt max_budget(const VkInstance& inst) {
  if (inst.dimensions() == 0) throw InputError("max budget of a 0-dimensional instance");
  return *std::max_element(inst.budget().begin(), inst.budget().end());
}

struct KnapsackResult {
  Profit value = 0;
  Solution solution;
};

namespace detail {

// Enumerates subsets of `items` (at most max_size of them) in lexicographic
// order of their sorted index lists, keeping the first subset that strictly
// improves the profit. The result is therefore the lexicographically smallest
// optimum. Costs are nonnegative, so an infeasible prefix kills its subtree.
template <typename Number>
KnapsackResult enumerate_subsets(const VkInstance& inst, std::span<const std::size_t> items, std::size_t max_size) {
  const int d = inst.dimensions();
  const std::size_t n = items.size();
  std::vector<std::vector<Number>> cost(n, std::vector<Number>(d));
  for (std::size_t k = 0; k < n; ++k)
    for (int j = 0; j < d; ++j) cost[k][j] = static_cast<Number>(inst.cost(items[k])[j]);
  std::vector<Number> residual(d);
  for (int j = 0; j < d; ++j) residual[j] = static_cast<Number>(inst.budget()[j]);
  std::vector<Profit> suffix(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] + inst.profit(items[k]);

  KnapsackResult best{-1, {}};
  std::vector<std::size_t> current;
  Profit current_profit = 0;

  auto search = [&](auto&& self, std::size_t start) -> void {
    if (current_profit > best.value) {
      best.value = current_profit;
      best.solution.chosen = current;
    }
    if (current.size() >= max_size) return;
    if (current_profit + suffix[start] <= best.value) return;
    for (std::size_t k = start; k < n; ++k) {
      if (current_profit + suffix[k] <= best.value) return;
      bool fits = true;
      for (int j = 0; j < d && fits; ++j) fits = cost[k][j] <= residual[j];
      if (!fits) continue;
      for (int j = 0; j < d; ++j) residual[j] -= cost[k][j];
      current.push_back(items[k]);
      current_profit += inst.profit(items[k]);
      self(self, k + 1);
      current_profit -= inst.profit(items[k]);
      current.pop_back();
      for (int j = 0; j < d; ++j) residual[j] += cost[k][j];
    }
  };
  search(search, 0);
  std::sort(best.solution.chosen.begin(), best.solution.chosen.end());
  return best;
}

// True when every budget and every column sum of costs fits comfortably in int64.
inline bool fits_machine_words(const VkInstance& inst, std::span<const std::size_t> items) {
  const BigInt limit = BigInt(1) << 62;
  for (int j = 0; j < inst.dimensions(); ++j) {
    BigInt sum = inst.budget()[j];
    for (std::size_t i : items) sum += inst.cost(i)[j];
    if (sum >= limit) return false;
  }
  return true;
}

inline KnapsackResult solve_subset(const VkInstance& inst, std::span<const std::size_t> items, std::size_t max_size) {
  for (std::size_t i : items) {
    if (i >= inst.item_count()) throw InputError("unknown item index " + std::to_string(i));
  }
  if (fits_machine_words(inst, items)) return enumerate_subsets<std::int64_t>(inst, items, max_size);
  return enumerate_subsets<BigInt>(inst, items, max_size);
}

inline std::vector<std::size_t> all_items(const VkInstance& inst) {
  std::vector<std::size_t> items(inst.item_count());
  std::iota(items.begin(), items.end(), std::size_t{0});
  return items;
}

}  // namespace detail

// Exact optimum by enumeration over all 2^n subsets.
inline KnapsackResult solve_bruteforce(const VkInstance& inst, const EnumerationCaps& caps = {}) {
  if (static_cast<long long>(inst.item_count()) > caps.knapsack_items) {
    throw SizeError("knapsack brute force over " + std::to_string(inst.item_count()) + " items exceeds cap " +
                    std::to_string(caps.knapsack_items));
  }
  const auto items = detail::all_items(inst);
  return detail::solve_subset(inst, items, items.size());
}

// Best feasible subset of `items` with at most s_max elements.
inline KnapsackResult solve_bruteforce_bounded_size(const VkInstance& inst, std::span<const std::size_t> items,
                                                    std::size_t s_max, const EnumerationCaps& caps = {}) {
  detail::check_cap(count_subsets_up_to(items.size(), s_max), caps.bounded_subsets, "size-bounded enumeration");
  return detail::solve_subset(inst, items, s_max);
}

inline KnapsackResult solve_bruteforce_bounded_size(const VkInstance& inst, std::size_t s_max,
                                                    const EnumerationCaps& caps = {}) {
  const auto items = detail::all_items(inst);
  return solve_bruteforce_bounded_size(inst, items, s_max, caps);
}

// Exact optimum by dynamic programming over residual budget vectors,
// processing items from last to first so that the forward reconstruction can
// reproduce the lexicographically smallest optimal subset.
inline KnapsackResult solve_dp(const VkInstance& inst, const EnumerationCaps& caps = {}) {
  const int d = inst.dimensions();
  const std::size_t n = inst.item_count();
  std::vector<std::int64_t> budget(d);
  std::uint64_t cells = 1;
  for (int j = 0; j < d; ++j) {
    if (!fits_int64(inst.budget()[j]) || inst.budget()[j] >= (BigInt(1) << 40)) {
      throw SizeError("budget coordinate " + std::to_string(j) + " does not fit the DP lattice");
    }
    budget[j] = static_cast<std::int64_t>(inst.budget()[j]);
    cells = saturating_mul(cells, static_cast<std::uint64_t>(budget[j]) + 1);
  }
  detail::check_cap(cells, caps.lattice_cells, "DP budget lattice");

  std::vector<std::uint64_t> stride(d);
  for (int j = 0; j < d; ++j) stride[j] = j == 0 ? 1 : stride[j - 1] * (budget[j - 1] + 1);

  // Items with a coordinate above its budget are never selectable.
  std::vector<char> usable(n, 1);
  std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(d, 0));
  std::vector<std::uint64_t> offset(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      if (inst.cost(i)[j] > inst.budget()[j]) {
        usable[i] = 0;
        break;
      }
      cost[i][j] = static_cast<std::int64_t>(inst.cost(i)[j]);
      offset[i] += static_cast<std::uint64_t>(cost[i][j]) * stride[j];
    }
  }

  std::vector<Profit> next(cells, 0), cur(cells, 0);
  std::vector<std::vector<bool>> take(n, std::vector<bool>(cells, false));
  std::vector<std::int64_t> coord(d);
  for (std::size_t i = n; i-- > 0;) {
    std::fill(coord.begin(), coord.end(), 0);
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
      Profit best = next[cell];
      bool fits = usable[i] != 0;
      for (int j = 0; j < d && fits; ++j) fits = coord[j] >= cost[i][j];
      if (fits) {
        const Profit with = inst.profit(i) + next[cell - offset[i]];
        if (with >= best) {
          best = with;
          take[i][cell] = true;
        }
      }
      cur[cell] = best;
      for (int j = 0; j < d; ++j) {
        if (++coord[j] <= budget[j]) break;
        coord[j] = 0;
      }
    }
    std::swap(cur, next);
  }

  KnapsackResult result{next[cells - 1], {}};
  Profit needed = result.value;
  std::uint64_t cell = cells - 1;
  for (std::size_t i = 0; i < n && needed > 0; ++i) {
    if (take[i][cell]) {
      result.solution.chosen.push_back(i);
      needed -= inst.profit(i);
      cell -= offset[i];
    }
  }
  return result;
}

}  // namespace vkred

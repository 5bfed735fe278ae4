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

#include <numeric>
#include <span>
#include <vector>

#include "vkred/caps.hpp"
#include "vkred/knapsack.hpp"
#include "vkred/numeric.hpp"

namespace vkred {

struct LpResult {
  Rational value = 0;
  std::vector<Rational> x;  // aligned with the item list passed in
};

namespace detail {

// max c.x s.t. A x <= b, x >= 0 with b >= 0, by the tableau simplex method
// with Bland's rule. The slack basis is feasible at the start, so no phase one.
inline LpResult simplex_max(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                            const std::vector<Rational>& c) {
  const std::size_t rows = a.size(), n = c.size(), cols = n + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < n; ++k) t[r][k] = a[r][k];
    t[r][n + r] = 1;
    t[r][cols] = b[r];
    basis[r] = n + r;
  }
  std::vector<Rational> z(cols + 1, 0);  // reduced costs; z[cols] = objective
  for (std::size_t k = 0; k < n; ++k) z[k] = -c[k];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t k = 0; k < cols; ++k) {
      if (z[k] < 0) {
        enter = k;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best_ratio = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rational ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // Every variable is boxed by the x <= 1 rows, so the LP is bounded.
    if (leave == rows) throw Error("simplex: unbounded direction");
    const Rational pivot = t[leave][enter];
    for (Rational& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t k = 0; k <= cols; ++k) t[r][k] -= f * t[leave][k];
    }
    if (z[enter] != 0) {
      const Rational f = z[enter];
      for (std::size_t k = 0; k <= cols; ++k) z[k] -= f * t[leave][k];
    }
    basis[leave] = enter;
  }

  LpResult out;
  out.value = z[cols];
  out.x.assign(n, 0);
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < n) out.x[basis[r]] = t[r][cols];
  return out;
}

}  // namespace detail

// LP relaxation over the listed items: max sum p_i x_i subject to
// sum c_ij x_i <= B_j and 0 <= x_i <= 1, solved exactly.
inline LpResult lp_solve_relaxation(const VkInstance& inst, std::span<const std::size_t> items,
                                    const EnumerationCaps& caps = {}) {
  const std::size_t n = items.size();
  detail::check_cap(n, static_cast<std::uint64_t>(caps.lp_variables), "LP relaxation");
  check_items(inst, Solution(std::vector<std::size_t>(items.begin(), items.end())));
  const int d = inst.dimensions();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b, c(n);
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = Rational(inst.cost(items[k])[j]);
    a.push_back(std::move(row));
    b.emplace_back(inst.budget()[j]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> row(n, 0);
    row[k] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
    c[k] = inst.profit(items[k]);
  }
  return detail::simplex_max(a, b, c);
}

inline LpResult lp_solve_relaxation(const VkInstance& inst, const EnumerationCaps& caps = {}) {
  std::vector<std::size_t> items(inst.item_count());
  std::iota(items.begin(), items.end(), std::size_t{0});
  return lp_solve_relaxation(inst, items, caps);
}

}  // namespace vkred

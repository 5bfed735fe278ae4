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
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vkred/errors.hpp"
#include "vkred/knapsack.hpp"
#include "vkred/numeric.hpp"

namespace vkred {

// gamma = num / den, with memoized powers of num and den. All logarithms are
// resolved by comparing num^t against x * den^t.
class Gamma {
 public:
  // gamma = 1 + 1/(10 d) = (10d + 1) / (10d).
  static Gamma for_dimensions(int d) {
    detail::require<InputError>(d >= 1, "gamma needs d >= 1");
    return Gamma(10 * d + 1, 10 * d);
  }

  Gamma(long long num, long long den) : num_pow_{BigInt(1)}, den_pow_{BigInt(1)} {
    detail::require<InputError>(den >= 1 && num > den, "gamma must exceed 1");
    num_pow_.push_back(num);
    den_pow_.push_back(den);
  }

  Rational value() const { return Rational(num_pow_[1], den_pow_[1]); }
  const Rational& power(int t) const {
    extend(t);
    if (static_cast<int>(rational_pow_.size()) <= t) rational_pow_.resize(t + 1);
    if (!rational_pow_[t]) rational_pow_[t] = Rational(num_pow_[t], den_pow_[t]);
    return *rational_pow_[t];
  }

  // Largest t with gamma^t <= x; x >= 1.
  int floor_log(const BigInt& x) const {
    detail::require<InputError>(x >= 1, "logarithm of x < 1");
    if (!at_most(1, x)) return 0;
    int lo = 1, hi = 2;  // at_most(lo) holds
    while (at_most(hi, x)) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      (at_most(mid, x) ? lo : hi) = mid;
    }
    return lo;
  }

  // Smallest t with gamma^t >= x; x >= 1.
  int ceil_log(const BigInt& x) const {
    const int t = floor_log(x);
    return num_pow_[t] == x * den_pow_[t] ? t : t + 1;
  }

 private:
  void extend(int t) const {
    while (static_cast<int>(num_pow_.size()) <= t) {
      num_pow_.push_back(num_pow_.back() * num_pow_[1]);
      den_pow_.push_back(den_pow_.back() * den_pow_[1]);
    }
  }
  bool at_most(int t, const BigInt& x) const {
    extend(t);
    return num_pow_[t] <= x * den_pow_[t];
  }

  mutable std::vector<BigInt> num_pow_;
  mutable std::vector<BigInt> den_pow_;
  mutable std::vector<std::optional<Rational>> rational_pow_;
};

inline Rational varpi_down(const BigInt& x, const Gamma& gamma) {
  detail::require<InputError>(x >= 0, "negative argument");
  return x == 0 ? Rational(0) : gamma.power(gamma.floor_log(x));
}

inline Rational varpi_up(const BigInt& x, const Gamma& gamma) {
  detail::require<InputError>(x >= 0, "negative argument");
  return x == 0 ? Rational(0) : gamma.power(gamma.ceil_log(x));
}

// Which expression realizes the discretized coordinate:
//   Zero            x_j = 0
//   Up t            gamma^t                  (varpi_up branch)
//   ComplementDown t  B_j - gamma^t          (complement branch, B_j - x_j >= 1)
//   Full            B_j - varpi_down(0) = B_j (complement branch at x_j = B_j)
enum class BucketKind { Zero, Up, ComplementDown, Full };

struct BucketKey {
  BucketKind kind = BucketKind::Zero;
  int exponent = 0;
  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
};

struct DiscretizedCost {
  std::vector<BucketKey> keys;
  std::vector<Rational> values;
  friend bool operator==(const DiscretizedCost& a, const DiscretizedCost& b) { return a.keys == b.keys; }
};

// Per coordinate: min(varpi_up(x_j), B_j - varpi_down(B_j - x_j)), ties to Up.
inline DiscretizedCost digamma(const CostVector& x, const CostVector& budget, const Gamma& gamma) {
  detail::require<InputError>(x.size() == budget.size(), "cost and budget differ in length");
  DiscretizedCost out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    detail::require<InputError>(x[j] >= 0 && x[j] <= budget[j], "cost coordinate exceeds its budget");
    if (x[j] == 0) {
      out.keys.push_back({BucketKind::Zero, 0});
      out.values.emplace_back(0);
      continue;
    }
    const int up_t = gamma.ceil_log(x[j]);
    const Rational up = gamma.power(up_t);
    const BigInt rest = budget[j] - x[j];
    BucketKey comp_key{BucketKind::Full, 0};
    Rational comp = Rational(budget[j]);
    if (rest > 0) {
      comp_key = {BucketKind::ComplementDown, gamma.floor_log(rest)};
      comp = Rational(budget[j]) - gamma.power(comp_key.exponent);
    }
    if (up <= comp) {
      out.keys.push_back({BucketKind::Up, up_t});
      out.values.push_back(up);
    } else {
      out.keys.push_back(comp_key);
      out.values.push_back(comp);
    }
  }
  return out;
}

// Keeps one maximum-profit item (smallest index on ties) per digamma key.
// Returns the survivors in increasing index order.
inline std::vector<std::size_t> prune_by_discretization(const VkInstance& inst, std::span<const std::size_t> items,
                                                        const Gamma& gamma) {
  std::map<std::vector<BucketKey>, std::size_t> best;
  for (std::size_t i : items) {
    auto key = digamma(inst.cost(i), inst.budget(), gamma).keys;
    auto [it, inserted] = best.emplace(std::move(key), i);
    if (inserted) continue;
    const std::size_t held = it->second;
    if (inst.profit(i) > inst.profit(held) || (inst.profit(i) == inst.profit(held) && i < held)) it->second = i;
  }
  std::vector<std::size_t> kept;
  for (const auto& [key, i] : best) kept.push_back(i);
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace vkred

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
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "vkred/caps.hpp"
#include "vkred/errors.hpp"
#include "vkred/numeric.hpp"
#include "vkred/rng.hpp"

namespace vkred {

// k subsets of a universe of size m such that any r distinct subsets
// together cover at least (1 - epsilon) * m elements.
struct Disperser {
  int universe_size = 0;
  int subset_size = 0;
  int r = 1;
  double epsilon = 0.0;
  std::vector<std::vector<int>> sets;
};

inline constexpr int kDisperserAttempts = 64;

// Smallest union size that meets the (1 - epsilon) coverage requirement.
inline int disperser_coverage_target(int universe_size, double epsilon) {
  const double raw = (1.0 - epsilon) * universe_size;
  return std::max(0, static_cast<int>(std::ceil(raw - 1e-9)));
}

// Exhaustive check of the covering property over all r-subsets of sets.
inline bool verify_disperser(const Disperser& disp, const EnumerationCaps& caps = {}) {
  const int k = static_cast<int>(disp.sets.size());
  if (disp.r < 1 || disp.r > k) return false;
  detail::check_cap(count_subsets_up_to(k, disp.r) , caps.disperser_subsets, "disperser verification");
  const int words = (disp.universe_size + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(k, std::vector<std::uint64_t>(words, 0));
  for (int s = 0; s < k; ++s) {
    for (int e : disp.sets[s]) {
      if (e < 0 || e >= disp.universe_size) return false;
      bits[s][e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
  const int target = disperser_coverage_target(disp.universe_size, disp.epsilon);
  std::vector<int> pick(disp.r);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    int covered = 0;
    for (int w = 0; w < words; ++w) {
      std::uint64_t acc = 0;
      for (int s : pick) acc |= bits[s][w];
      covered += std::popcount(acc);
    }
    if (covered < target) return false;
    int i = disp.r - 1;
    while (i >= 0 && pick[i] == k - disp.r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < disp.r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

// Draws k uniformly random l-subsets and keeps the first draw that passes
// verify_disperser; attempt t uses the stream derive_seed(seed, t).
inline Disperser build_disperser(int m, int k, int l, int r, double epsilon, std::uint64_t seed,
                                 const EnumerationCaps& caps = {}) {
  detail::require<InputError>(m >= 0 && k >= 1, "disperser needs m >= 0 and k >= 1");
  detail::require<InputError>(r >= 1 && r <= k, "disperser needs 1 <= r <= k");
  detail::require<InputError>(l >= 0 && l <= m, "disperser needs 0 <= l <= m");
  detail::require<InputError>(epsilon >= 0.0 && epsilon <= 1.0, "epsilon must lie in [0, 1]");
  detail::check_cap(count_subsets_up_to(k, r), caps.disperser_subsets, "disperser verification");
  std::vector<int> universe(m);
  std::iota(universe.begin(), universe.end(), 0);
  for (int attempt = 0; attempt < kDisperserAttempts; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    Disperser disp{m, l, r, epsilon, {}};
    for (int s = 0; s < k; ++s) {
      std::vector<int> pool = universe;
      for (int t = 0; t < l; ++t) std::swap(pool[t], pool[rng.uniform(t, m - 1)]);
      std::vector<int> chosen(pool.begin(), pool.begin() + l);
      std::sort(chosen.begin(), chosen.end());
      disp.sets.push_back(std::move(chosen));
    }
    if (verify_disperser(disp, caps)) return disp;
  }
  throw ConstructionError("no (" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(l) + "," +
                          std::to_string(r) + ")-disperser found within " + std::to_string(kDisperserAttempts) +
                          " attempts");
}

}  // namespace vkred

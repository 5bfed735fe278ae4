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

// Property suites over seeded random instances. Instance t of a suite draws
// from the stream derive_seed(seed, t), so results do not depend on how the
// instances are scheduled.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vkred/approx.hpp"
#include "vkred/caps.hpp"
#include "vkred/csp.hpp"
#include "vkred/csp_chain.hpp"
#include "vkred/discretize.hpp"
#include "vkred/generate.hpp"
#include "vkred/io.hpp"
#include "vkred/knapsack.hpp"
#include "vkred/rng.hpp"
#include "vkred/sat_reduction.hpp"
#include "vkred/vk_reduction.hpp"

namespace vkred {

struct CheckRecord {
  std::string property;
  std::string instance;  // digest of the instance under test
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  void add(std::string property, std::string instance, std::string expected, std::string observed, bool pass) {
    records.push_back({std::move(property), std::move(instance), std::move(expected), std::move(observed), pass});
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
  }
  bool passed() const { return failures() == 0; }
  const CheckRecord* first_failure() const {
    for (const auto& r : records)
      if (!r.pass) return &r;
    return nullptr;
  }
};

inline Json to_json(const VerificationReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    records.push_back(Json{{"property", r.property},
                           {"instance", r.instance},
                           {"expected", r.expected},
                           {"observed", r.observed},
                           {"pass", r.pass}});
  }
  return Json{{"kind", "report"},
              {"suite", report.suite},
              {"seed", report.seed},
              {"checks", report.records.size()},
              {"failures", report.failures()},
              {"passed", report.passed()},
              {"records", std::move(records)}};
}

inline std::string to_csv(const VerificationReport& report) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "suite,property,instance,expected,observed,pass\n";
  for (const auto& r : report.records) {
    out << field(report.suite) << ',' << field(r.property) << ',' << r.instance << ',' << field(r.expected) << ','
        << field(r.observed) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

// A claimed relation between a source and a target solution of a reduction.
struct ReductionCertificate {
  std::string source_digest;
  std::string target_digest;
  Json source_solution;
  Json target_solution;
  std::string direction;  // "forward" or "backward"
  std::string relation;
  bool holds = false;
};

inline Json to_json(const ReductionCertificate& c) {
  return Json{{"kind", "certificate"},        {"source", c.source_digest},   {"target", c.target_digest},
              {"direction", c.direction},     {"relation", c.relation},      {"holds", c.holds},
              {"source_solution", c.source_solution}, {"target_solution", c.target_solution}};
}

// Forward certificate for either R-CSP -> VK reduction: a total consistent
// phi maps to a feasible S of profit |V| (simple) or |V| + 2|E| (embed).
inline ReductionCertificate certify_forward(const RcspInstance& pi, const VkInstance& target,
                                            const PartialAssignment& phi, const ReductionVariant& variant) {
  ReductionCertificate c;
  c.source_digest = digest(to_json(pi));
  c.target_digest = digest(to_json(target));
  c.direction = "forward";
  const Solution s = vk_solution_from_assignment(pi, phi, variant);
  c.source_solution = to_json(phi);
  c.target_solution = to_json(s);
  const Profit want = std::holds_alternative<SimpleVariant>(variant)
                          ? pi.graph().vertex_count()
                          : pi.graph().vertex_count() + 2 * pi.graph().edge_count();
  c.relation = "feasible and p(S) = " + std::to_string(want);
  c.holds = is_consistent(pi, phi) && check_feasible(target, s) && profit(target, s) == want;
  return c;
}

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 0;  // 0 selects the suite default
  EnumerationCaps caps;
  bool corrupt_budget = false;  // negative control for the reduction suites
};

namespace detail {

inline int count_or(const SuiteOptions& opt, int fallback) { return opt.count > 0 ? opt.count : fallback; }

inline VkInstance maybe_corrupt(const VkInstance& inst, bool corrupt) {
  if (!corrupt || inst.dimensions() == 0) return inst;
  CostVector b = inst.budget();
  if (b[0] > 0) b[0] -= 1;
  return inst.with_budget(std::move(b));
}

inline std::string str(long long v) { return std::to_string(v); }

// w_j(S) for constraint j of D, from the projections (range shifted to 1..m).
inline BigInt direct_weight(const RcspInstance& pi, int j, const Solution& s) {
  const Graph& g = pi.graph();
  const int n = g.vertex_count(), sigma = pi.sigma_size(), m = pi.upsilon_size();
  BigInt total = 0;
  for (std::size_t i : s.chosen) {
    const int v = static_cast<int>(i) / sigma, symbol = static_cast<int>(i) % sigma;
    if (j < n) {
      if (v == j) total += m;
      continue;
    }
    const int e = j - n;
    const auto [a, b] = g.edge(e);
    if (v == a) total += pi.first_projections()[e][symbol] + 1;
    if (v == b) total += m - (pi.second_projections()[e][symbol] + 1);
  }
  return total;
}

inline Solution random_subset(std::size_t items, Rng& rng) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < items; ++i)
    if (rng.bernoulli(0.5)) chosen.push_back(i);
  return Solution(std::move(chosen));
}

// At most one symbol per vertex; each vertex is left out with probability 1/4.
inline Solution random_partial_function(const RcspInstance& pi, Rng& rng) {
  std::vector<std::size_t> chosen;
  for (Vertex v = 0; v < pi.graph().vertex_count(); ++v)
    if (!rng.bernoulli(0.25)) chosen.push_back(item_index(pi, v, rng.uniform_int(0, pi.sigma_size() - 1)));
  return Solution(std::move(chosen));
}

inline RcspInstance random_embed_source(Rng& rng, int max_sigma, int max_m) {
  const int n = rng.bernoulli(0.5) ? 4 : 6;
  return random_rcsp(random_regular3(n, rng), rng.uniform_int(1, max_sigma), rng.uniform_int(1, max_m), rng);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Simple reduction: Par(Pi) = OPT(rcsp_to_vk_simple(Pi)).

inline VerificationReport verify_simple_roundtrip(const SuiteOptions& opt) {
  VerificationReport rep{"simple-roundtrip", opt.seed, {}};
  const int count = detail::count_or(opt, 200);
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const int n = rng.uniform_int(1, 5);
    const RcspInstance pi = random_rcsp(random_graph(n, 0.6, rng), rng.uniform_int(1, 3), rng.uniform_int(1, 3), rng);
    const VkInstance vk = detail::maybe_corrupt(rcsp_to_vk_simple(pi), opt.corrupt_budget);
    const std::string id = digest(to_json(pi));
    const ParResult par = par_bruteforce(pi, opt.caps);
    const KnapsackResult best = solve_bruteforce(vk, opt.caps);
    rep.add("Par(Pi) = OPT(simple VK)", id, detail::str(par.size), detail::str(best.value), par.size == best.value);
    const PartialAssignment phi = extract_simple(pi, vk, best.solution);
    const bool ok = is_consistent(pi, phi) && phi.size() == best.value;
    rep.add("extracted phi consistent with |phi| = p(S)", id, detail::str(best.value), detail::str(phi.size()), ok);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Embed reduction: completeness for F in {1, 2, |V|}; soundness on every
// feasible subset when the item set is small, else on the brute-force optimum.

inline VerificationReport verify_embed_roundtrip(const SuiteOptions& opt) {
  VerificationReport rep{"embed-roundtrip", opt.seed, {}};
  const int count = detail::count_or(opt, 40);
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const int n = t % 2 == 0 ? 4 : 6;
    const int sigma = n == 4 ? rng.uniform_int(1, 2) : rng.uniform_int(1, 3);
    const PlantedRcsp planted = planted_rcsp(random_regular3(n, rng), sigma, rng.uniform_int(1, 3), rng);
    const RcspInstance& pi = planted.instance;
    const std::string id = digest(to_json(pi));
    const Profit full = n + 2 * pi.graph().edge_count();
    std::vector<int> fs{1, 2, n};
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    for (int F : fs) {
      const EmbedReduction red = rcsp_to_vk_embed(pi, F);
      const VkInstance vk = detail::maybe_corrupt(red.instance, opt.corrupt_budget);
      const Solution s = vk_solution_from_assignment(pi, planted.planted);
      const bool feasible = check_feasible(vk, s);
      const Profit p = profit(vk, s);
      rep.add("completeness F=" + std::to_string(F), id, "feasible, p=" + detail::str(full),
              std::string(feasible ? "feasible" : "infeasible") + ", p=" + detail::str(p), feasible && p == full);
      if (vk.item_count() > 12 || F > 2) continue;
      // Exhaustive soundness over all feasible subsets.
      std::size_t checked = 0, bad = 0;
      const std::size_t items = vk.item_count();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < items; ++i)
          if (mask >> i & 1U) chosen.push_back(i);
        const Solution sub(std::move(chosen));
        if (!check_feasible(vk, sub)) continue;
        ++checked;
        const PartialAssignment phi = extract_embed(pi, red.artifacts, vk, sub);
        const long long bound = embed_extraction_bound(pi, F, profit(vk, sub));
        if (!is_consistent(pi, phi) || phi.size() < bound) ++bad;
      }
      rep.add("soundness over all feasible subsets F=" + std::to_string(F), id,
              "0 violations", detail::str(static_cast<long long>(bad)) + " violations in " +
                                  detail::str(static_cast<long long>(checked)),
              bad == 0 && checked > 0);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Algebraic identities of the embed construction on random subsets.

inline VerificationReport verify_obs_basic(const SuiteOptions& opt, int subsets = 1000) {
  VerificationReport rep{"obs-basic", opt.seed, {}};
  const int count = detail::count_or(opt, 50);
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const RcspInstance pi = detail::random_embed_source(rng, 3, 3);
    const int n = pi.graph().vertex_count();
    const int F = rng.uniform_int(1, n);
    const EmbedReduction red = rcsp_to_vk_embed(pi, F);
    const auto& art = red.artifacts;
    const std::string id = digest(to_json(pi)) + "/F=" + std::to_string(F);
    std::size_t bad[3] = {0, 0, 0};
    for (int k = 0; k < subsets; ++k) {
      const Solution s = k % 2 == 0 ? detail::random_subset(red.instance.item_count(), rng)
                                    : detail::random_partial_function(pi, rng);
      const CostVector c = load(red.instance, s);
      long long count_all = 0;
      for (int l = 0; l < art.chunk_count(); ++l) {
        BigInt digits = 0, q = 1;
        for (int j : art.chunks[l]) {
          q *= art.Q;
          digits += detail::direct_weight(pi, j, s) * q;
        }
        long long count_l = 0;
        for (std::size_t i : s.chosen) count_l += art.J[l][static_cast<int>(i) / pi.sigma_size()];
        count_all += count_l;
        if (c[2 * l] != digits) ++bad[0];
        if (c[2 * l + 1] != art.M * count_l - digits) ++bad[1];
      }
      if (profit(red.instance, s) != count_all) ++bad[2];
    }
    const char* names[3] = {"(i) c_l1(S) = sum w_j(S) Q^ord", "(ii) c_l2(S) = M sum J - sum w_j(S) Q^ord",
                            "(iii) p(S) = sum_l sum J(l,v)"};
    for (int k = 0; k < 3; ++k) {
      rep.add(names[k], id, "0 violations", detail::str(static_cast<long long>(bad[k])) + " violations", bad[k] == 0);
    }
  }
  return rep;
}

// Count constraint and tight-chunk weights for feasible subsets: exhaustive on
// small item sets, random otherwise.
inline VerificationReport verify_vkw(const SuiteOptions& opt, int subsets = 1000) {
  VerificationReport rep{"vkw", opt.seed, {}};
  const int count = detail::count_or(opt, 50);
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const PlantedRcsp planted = planted_rcsp(random_regular3(t % 2 == 0 ? 4 : 6, rng), rng.uniform_int(1, 2),
                                             rng.uniform_int(1, 3), rng);
    const RcspInstance& pi = planted.instance;
    const int F = rng.uniform_int(1, pi.graph().vertex_count());
    const EmbedReduction red = rcsp_to_vk_embed(pi, F);
    const VkInstance vk = detail::maybe_corrupt(red.instance, opt.corrupt_budget);
    const auto& art = red.artifacts;
    const std::string id = digest(to_json(pi)) + "/F=" + std::to_string(F);
    const std::size_t items = vk.item_count();
    const bool exhaustive = items <= 12;
    const std::uint64_t rounds = exhaustive ? (std::uint64_t{1} << items) : static_cast<std::uint64_t>(subsets);
    std::size_t feasible = 0, tight = 0, bad_count = 0, bad_tight = 0;
    auto check = [&](const Solution& s) {
      if (!check_feasible(vk, s)) return;
      ++feasible;
      for (int l = 0; l < art.chunk_count(); ++l) {
        long long sum = 0;
        for (std::size_t i : s.chosen) sum += art.J[l][static_cast<int>(i) / pi.sigma_size()];
        if (sum > art.N[l]) ++bad_count;
        if (sum != art.N[l]) continue;
        ++tight;
        for (int j : art.chunks[l])
          if (detail::direct_weight(pi, j, s) != art.m) ++bad_tight;
      }
    };
    check(vk_solution_from_assignment(pi, planted.planted));
    for (std::uint64_t k = 0; k < rounds; ++k) {
      if (exhaustive) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < items; ++i)
          if (k >> i & 1U) chosen.push_back(i);
        check(Solution(std::move(chosen)));
      } else {
        check(k % 2 == 0 ? detail::random_subset(items, rng) : detail::random_partial_function(pi, rng));
      }
    }
    const std::string scope = std::to_string(feasible) + " feasible subsets";
    rep.add("(i) sum J(l,v) <= N_l", id, "0 violations", detail::str(static_cast<long long>(bad_count)) + " in " + scope,
            bad_count == 0 && feasible > 0);
    rep.add("(ii) tight chunk forces w_j(S) = m", id, "0 violations",
            detail::str(static_cast<long long>(bad_tight)) + " in " + std::to_string(tight) + " tight chunks",
            bad_tight == 0 && tight > 0);
  }
  return rep;
}

// Base-Q uniqueness, exhaustively for Q <= max_q and up to max_digits digits.
inline VerificationReport verify_base_q(int max_q = 7, int max_digits = 4) {
  VerificationReport rep{"base-q", 0, {}};
  for (int q = 2; q <= max_q; ++q) {
    for (int len = 1; len <= max_digits; ++len) {
      std::size_t cases = 0, bad = 0;
      std::vector<BigInt> digits(len, 0);
      std::uint64_t total = 1;
      for (int i = 0; i < len; ++i) total *= q;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < len; ++i, c /= q) digits[i] = static_cast<long long>(c % q);
        for (int a = 0; a < q; ++a, ++cases)
          if (!verify_base_q_digits(digits, q, a)) ++bad;
      }
      rep.add("base-Q uniqueness", "Q=" + std::to_string(q) + ",n=" + std::to_string(len), "0 violations",
              detail::str(static_cast<long long>(bad)) + " in " + std::to_string(cases), bad == 0);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// 2-CSP -> R-CSP chain on 3-regular H with four vertices.

inline VerificationReport verify_csp_chain(const SuiteOptions& opt) {
  VerificationReport rep{"csp-chain", opt.seed, {}};
  const int count = detail::count_or(opt, 100);
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const Graph h = random_regular3(4, rng);
    const int sigma = rng.uniform_int(2, 3);
    const Csp2Instance gamma = random_csp2(h, sigma, 0.15 + 0.35 * rng.unit(), rng.bernoulli(0.5), rng);
    const int edges = h.edge_count();
    const std::string id = digest(to_json(gamma));
    const CspOptimum csp = csp_opt_bruteforce(gamma, opt.caps);
    const Csp2ToRcsp chain = csp2_to_rcsp(gamma);
    const ParResult par = par_bruteforce(chain.instance(), opt.caps);
    const bool full_csp = csp.value == edges, full_par = par.size == edges;
    rep.add("CSP = |E| iff Par = |E|", id, std::string(full_csp ? "both full" : "both deficient"),
            "CSP=" + detail::str(csp.value) + ", Par=" + detail::str(par.size), full_csp == full_par);
    const int deficit = edges - par.size;
    const auto lambda = extract_csp2_assignment(gamma, chain, par.witness);
    const int satisfied = csp_value(gamma, lambda);
    rep.add("extracted assignment satisfies >= |E| - 6t", id, ">= " + detail::str(edges - 6 * deficit),
            detail::str(satisfied), satisfied >= edges - 6 * deficit);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Geometric rounding bounds for every x in [0, B], B <= max_budget, d <= max_d.

inline VerificationReport verify_discretize(int max_d = 5, int max_budget = 200) {
  VerificationReport rep{"discretize", 0, {}};
  for (int d = 1; d <= max_d; ++d) {
    const Gamma gamma = Gamma::for_dimensions(d);
    const Rational g = gamma.value();
    std::size_t cases = 0, bad_sandwich = 0, bad_up = 0, bad_comp = 0;
    std::string first_bad;
    for (int b = 0; b <= max_budget; ++b) {
      for (int x = 0; x <= b; ++x) {
        ++cases;
        const Rational down = varpi_down(x, gamma), up = varpi_up(x, gamma);
        if (x >= 1 && !(down <= x && x <= up && up < g * x)) {
          ++bad_sandwich;
          if (first_bad.empty()) first_bad = "sandwich at x=" + std::to_string(x);
        }
        if (x == 0 && (down != 0 || up != 0)) ++bad_sandwich;
        const Rational value = digamma(CostVector{x}, CostVector{b}, gamma).values[0];
        if (value > g * x) {
          ++bad_up;
          if (first_bad.empty()) first_bad = "gamma bound at x=" + std::to_string(x) + ",B=" + std::to_string(b);
        }
        if (value > Rational(b) - Rational(b - x) / g) {
          ++bad_comp;
          if (first_bad.empty()) first_bad = "complement bound at x=" + std::to_string(x) + ",B=" + std::to_string(b);
        }
      }
    }
    const std::string id = "d=" + std::to_string(d);
    const std::string scope = " in " + std::to_string(cases) + (first_bad.empty() ? "" : " (" + first_bad + ")");
    rep.add("varpi_down(x) <= x <= varpi_up(x) < gamma x", id, "0 violations",
            detail::str(static_cast<long long>(bad_sandwich)) + scope, bad_sandwich == 0);
    rep.add("digamma(x) <= gamma x", id, "0 violations", detail::str(static_cast<long long>(bad_up)) + scope,
            bad_up == 0);
    rep.add("digamma(x) <= B - (B - x)/gamma", id, "0 violations", detail::str(static_cast<long long>(bad_comp)) + scope,
            bad_comp == 0);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Unbounded branch vs brute force, plus the <= d items pigeonhole.

inline VerificationReport verify_unbounded(const SuiteOptions& opt) {
  VerificationReport rep{"unbounded", opt.seed, {}};
  const int count = detail::count_or(opt, 100);
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const int n = rng.uniform_int(1, 14), d = rng.uniform_int(1, 4);
    const VkInstance inst = random_unbounded_vk(n, d, 50, 20, rng);
    const std::string id = digest(to_json(inst));
    const Solution s = approx_2unbounded(inst, opt.caps);
    const KnapsackResult best = solve_bruteforce(inst, opt.caps);
    const Profit p = profit(inst, s);
    const bool ok = check_feasible(inst, s) && 10.0 * std::sqrt(double(d)) * double(p) >= double(best.value);
    rep.add("feasible and p >= OPT/(10 sqrt d)", id, "OPT=" + detail::str(best.value), "p=" + detail::str(p), ok);
    if (n <= 10) {
      std::size_t largest = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> chosen;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1U) chosen.push_back(i);
        Solution sub(std::move(chosen));
        if (check_feasible(inst, sub)) largest = std::max(largest, sub.size());
      }
      rep.add("feasible subsets have <= d items", id, "<= " + std::to_string(d), std::to_string(largest),
              largest <= static_cast<std::size_t>(d));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Combined algorithm on mixed instances. The median check runs per d.

inline VerificationReport verify_combined(const SuiteOptions& opt) {
  VerificationReport rep{"combined", opt.seed, {}};
  const int count = detail::count_or(opt, 200);
  std::map<int, std::vector<double>> ratios;
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const int n = rng.uniform_int(1, 14), d = rng.uniform_int(1, 4);
    const VkInstance inst = random_mixed_vk(n, d, 50, 20, 0.5, rng);
    const std::string id = digest(to_json(inst));
    const Solution s = approx_sqrt_d(inst, derive_seed(opt.seed ^ 0x5eedULL, t), opt.caps);
    const Profit p = profit(inst, s);
    Profit single = 0;
    for (std::size_t i = 0; i < inst.item_count(); ++i)
      if (check_feasible(inst, Solution({i}))) single = std::max(single, inst.profit(i));
    rep.add("feasible and p >= best single item", id, ">= " + detail::str(single), detail::str(p),
            check_feasible(inst, s) && p >= single);
    const KnapsackResult best = solve_bruteforce(inst, opt.caps);
    ratios[d].push_back(best.value == 0 ? 1.0 : double(p) / double(best.value));
  }
  for (auto& [d, values] : ratios) {
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size();
    const double median = k % 2 == 1 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
    const double floor = 1.0 / (4.0 * std::sqrt(double(d)));
    std::ostringstream obs, exp;
    obs << "median " << median << " over " << k;
    exp << ">= " << floor;
    rep.add("median ratio >= 1/(4 sqrt d)", "d=" + std::to_string(d), exp.str(), obs.str(), median >= floor);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// DP and brute force agree on value and on the chosen subset.

inline VerificationReport verify_oracles(const SuiteOptions& opt) {
  VerificationReport rep{"oracles", opt.seed, {}};
  const int count = detail::count_or(opt, 300);
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const VkInstance inst = random_vk(rng.uniform_int(0, 12), rng.uniform_int(0, 3), 20, 15, rng);
    const std::string id = digest(to_json(inst));
    const KnapsackResult dp = solve_dp(inst, opt.caps);
    const KnapsackResult bf = solve_bruteforce(inst, opt.caps);
    rep.add("solve_dp = solve_bruteforce", id, detail::str(bf.value), detail::str(dp.value), dp.value == bf.value);
    rep.add("DP witness feasible with the reported value", id, detail::str(dp.value),
            detail::str(profit(inst, dp.solution)),
            check_feasible(inst, dp.solution) && profit(inst, dp.solution) == dp.value);
    rep.add("identical lexicographically smallest optimum", id, dump_document(to_json(bf.solution)),
            dump_document(to_json(dp.solution)), dp.solution == bf.solution);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Satisfiable 3-SAT through both routes gives Par = |V(H)|.

inline VerificationReport verify_sat_completeness(const SuiteOptions& opt) {
  VerificationReport rep{"sat-completeness", opt.seed, {}};
  const int count = detail::count_or(opt, 100);
  EnumerationCaps caps = opt.caps;
  // The search stops at the first total consistent assignment; the raised cap
  // only admits the alphabet sizes, it does not extend any enumeration.
  caps.partial_assignments = UINT64_MAX;
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const int n = rng.uniform_int(3, 10);
    const PlantedSat sat = planted_sat(n, rng.uniform_int(1, n), 3, rng);
    const std::string id = digest(to_json(sat.instance));

    const SatEmbeddingRoute emb = sat_to_rcsp_embedding_route(sat.instance, 6, caps);
    const int k1 = emb.reduction.instance.graph().vertex_count();
    const ParResult par1 = par_bruteforce(emb.reduction.instance, caps);
    rep.add("embedding route Par = |V(H)|", id, detail::str(k1), detail::str(par1.size), par1.size == k1);

    const int k = rng.uniform_int(2, 6), r = std::min(2, k), m = sat.instance.clause_count();
    const SatDisperserRoute disp =
        sat_to_rcsp_disperser_route(sat.instance, k, r, 0.5, derive_seed(opt.seed, 1000000 + t), (m + 1) / 2, caps);
    const ParResult par2 = par_bruteforce(disp.reduction.instance, caps);
    rep.add("disperser route Par = |V(H)|", id, detail::str(k), detail::str(par2.size), par2.size == k);
  }
  return rep;
}

inline const std::map<std::string, std::function<VerificationReport(const SuiteOptions&)>>& verification_suites() {
  static const std::map<std::string, std::function<VerificationReport(const SuiteOptions&)>> suites{
      {"simple-roundtrip", verify_simple_roundtrip},
      {"embed-roundtrip", verify_embed_roundtrip},
      {"csp-chain", verify_csp_chain},
      {"discretize", [](const SuiteOptions&) { return verify_discretize(); }},
      {"obs-basic", [](const SuiteOptions& o) { return verify_obs_basic(o); }},
      {"vkw", [](const SuiteOptions& o) { return verify_vkw(o); }},
      {"base-q", [](const SuiteOptions&) { return verify_base_q(); }},
      {"unbounded", verify_unbounded},
      {"combined", verify_combined},
      {"oracles", verify_oracles},
      {"sat-completeness", verify_sat_completeness},
  };
  return suites;
}

}  // namespace vkred

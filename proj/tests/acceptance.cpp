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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "vkred/vkred.hpp"

namespace {

using namespace vkred;

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;
};

// Records whose property starts with `prefix` (empty matches all).
Tally tally(const VerificationReport& rep, const std::string& prefix = "") {
  Tally t;
  for (const CheckRecord& r : rep.records) {
    if (r.property.rfind(prefix, 0) != 0) continue;
    ++t.checks;
    if (!r.pass && t.failures++ == 0) t.first = r.property + " on " + r.instance + ": expected " + r.expected +
                                                 ", observed " + r.observed;
  }
  return t;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome judge(const std::vector<Tally>& parts, std::size_t min_checks) {
  std::size_t checks = 0, failures = 0;
  std::string first;
  for (const Tally& t : parts) {
    if (t.checks == 0) return {false, "a required property produced no checks"};
    checks += t.checks;
    failures += t.failures;
    if (first.empty()) first = t.first;
  }
  if (checks < min_checks) return {false, std::to_string(checks) + " checks, fewer than " + std::to_string(min_checks)};
  if (failures > 0) return {false, std::to_string(failures) + " of " + std::to_string(checks) + " failed; " + first};
  return {true, std::to_string(checks) + " checks"};
}

}  // namespace

int main() {
  SuiteOptions opt;
  opt.seed = 20261018;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"simple reduction: Par(Pi) = OPT over >= 200 instances",
       [&] {
         const auto rep = verify_simple_roundtrip(opt);
         return judge({tally(rep, "Par(Pi) = OPT")}, 200);
       }},
      {"embed reduction completeness for F in {1, 2, |V|}",
       [&] {
         const auto rep = verify_embed_roundtrip(opt);
         return judge({tally(rep, "completeness F=")}, 3 * 40);
       }},
      {"embed reduction soundness over all feasible subsets, F in {1, 2}",
       [&] {
         const auto rep = verify_embed_roundtrip(opt);
         return judge({tally(rep, "soundness over all feasible subsets F=1"),
                       tally(rep, "soundness over all feasible subsets F=2")},
                      2);
       }},
      {"algebraic identities: chunk cost identities, constraint weight bounds, base-Q uniqueness",
       [&] {
         const auto a = verify_obs_basic(opt, 1000), b = verify_vkw(opt, 1000), c = verify_base_q(7, 4);
         return judge({tally(a), tally(b), tally(c)}, 3 * 50 + 2 * 50);
       }},
      {"CSP chain: full iff full, extraction within 6t",
       [&] {
         const auto rep = verify_csp_chain(opt);
         return judge({tally(rep, "CSP = |E| iff Par = |E|"), tally(rep, "extracted assignment")}, 200);
       }},
      {"discretization bounds for d <= 5, B <= 200",
       [&] { return judge({tally(verify_discretize(5, 200))}, 5 * 3); }},
      {"unbounded branch: p >= OPT/(10 sqrt d), feasible sets have <= d items",
       [&] {
         const auto rep = verify_unbounded(opt);
         return judge({tally(rep, "feasible and p >="), tally(rep, "feasible subsets have")}, 100);
       }},
      {"combined algorithm: feasible, beats best single item, median ratio",
       [&] {
         const auto rep = verify_combined(opt);
         return judge({tally(rep, "feasible and p >= best single"), tally(rep, "median ratio")}, 200);
       }},
      {"oracle agreement: DP = brute force over >= 300 instances",
       [&] {
         const auto rep = verify_oracles(opt);
         return judge({tally(rep, "solve_dp = solve_bruteforce")}, 300);
       }},
      {"3-SAT completeness through both routes: Par = |V(H)|",
       [&] {
         SuiteOptions o = opt;
         o.caps.partial_assignments = UINT64_MAX;
         const auto rep = verify_sat_completeness(o);
         return judge({tally(rep, "embedding route"), tally(rep, "disperser route")}, 200);
       }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%s, %.1fs)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.c_str(), secs);
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

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

// vkred: generate instances, run reductions and solvers, verify properties.
//
// Exit codes: 0 success, 2 usage or input error, 3 cap exceeded,
// 4 verification failure.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "vkred/vkred.hpp"

namespace {

using namespace vkred;

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

struct Common {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> cap_enum;
  std::optional<std::uint64_t> cap_lattice;
  std::string format = "json";
  std::string out;
  bool seed_given = false;

  EnumerationCaps caps() const {
    EnumerationCaps c;
    if (cap_enum) {
      c.csp_assignments = c.partial_assignments = c.bounded_subsets = c.disperser_subsets = *cap_enum;
      int bits = 0;
      while (bits < 62 && (std::uint64_t{1} << (bits + 1)) <= *cap_enum) ++bits;
      c.knapsack_items = c.sat_variables = bits;
    }
    if (cap_lattice) c.lattice_cells = *cap_lattice;
    return c;
  }
};

void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.out, std::ios::binary);
  if (!out) throw InputError("cannot write " + common.out);
  out << text;
}

void add_common(CLI::App* cmd, Common& common, bool with_format) {
  cmd->add_option("--seed", common.seed, "random seed")->each([&common](const std::string&) { common.seed_given = true; });
  cmd->add_option("--cap-enum", common.cap_enum, "cap on enumerated candidates for exact oracles");
  cmd->add_option("--cap-lattice", common.cap_lattice, "cap on DP lattice cells");
  cmd->add_option("--out", common.out, "output path (default stdout)");
  if (with_format) cmd->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind;
  int vertices = 4;
  double edge_probability = 0.5;
  bool regular3 = false;
  bool planted = false;
  int alphabet = 2;
  int range = 2;
  double density = 0.5;
  int variables = 6;
  int clauses = 6;
  int max_occurrence = 3;
  int items = 8;
  int dimensions = 2;
  long long max_budget = 20;
  long long max_profit = 10;
  std::string profile = "general";
};

Json run_gen(const GenArgs& a, const Common& common) {
  Rng rng(common.seed);
  if (a.kind == "sat") return to_json(planted_sat(a.variables, a.clauses, a.max_occurrence, rng).instance);
  if (a.kind == "vk") {
    if (a.profile == "general") return to_json(random_vk(a.items, a.dimensions, a.max_budget, a.max_profit, rng));
    const double fraction = a.profile == "mixed" ? 0.5 : 0.0;
    return to_json(random_mixed_vk(a.items, a.dimensions, a.max_budget, a.max_profit, fraction, rng));
  }
  const Graph g = a.regular3 ? random_regular3(a.vertices, rng) : random_graph(a.vertices, a.edge_probability, rng);
  if (a.kind == "rcsp") {
    return to_json(a.planted ? planted_rcsp(g, a.alphabet, a.range, rng).instance
                             : random_rcsp(g, a.alphabet, a.range, rng));
  }
  return to_json(random_csp2(g, a.alphabet, a.density, a.planted, rng));
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceArgs {
  std::string route;
  std::string in;
  int F = 1;
  int k = 6;
  int r = 2;
  double epsilon = 0.5;
  std::optional<int> subset_size;
  std::string artifacts;
};

Json run_reduce(const ReduceArgs& a, const Common& common) {
  const Json doc = read_document(a.in);
  const EnumerationCaps caps = common.caps();
  auto side = [&](const Json& j) {
    if (!a.artifacts.empty()) write_document(a.artifacts, j);
  };
  if (a.route == "sat2rcsp-embed") {
    const SatEmbeddingRoute out = sat_to_rcsp_embedding_route(sat_from_json(doc), a.k, caps);
    side(Json{{"kind", "embedding"},
              {"target_vertices", out.embedding.target.vertex_count()},
              {"target_edges", detail::edges_json(out.embedding.target)},
              {"images", out.embedding.images},
              {"depth", out.depth},
              {"warnings", out.reduction.warnings}});
    return to_json(out.reduction.instance);
  }
  if (a.route == "sat2rcsp-disperser") {
    const SatDisperserRoute out =
        sat_to_rcsp_disperser_route(sat_from_json(doc), a.k, a.r, a.epsilon, common.seed, a.subset_size, caps);
    side(Json{{"kind", "disperser"},
              {"universe", out.disperser.universe_size},
              {"subset_size", out.disperser.subset_size},
              {"r", out.disperser.r},
              {"epsilon", out.disperser.epsilon},
              {"sets", out.disperser.sets},
              {"warnings", out.reduction.warnings}});
    return to_json(out.reduction.instance);
  }
  if (a.route == "csp2rcsp") {
    const Csp2ToRcsp out = csp2_to_rcsp(csp2_from_json(doc));
    side(to_json(out.gcsp));
    return to_json(out.instance());
  }
  const RcspInstance pi = rcsp_from_json(doc);
  if (a.route == "rcsp2vk-simple") return to_json(rcsp_to_vk_simple(pi));
  const EmbedReduction out = rcsp_to_vk_embed(pi, a.F);
  side(to_json(out.artifacts, pi));
  return to_json(out.instance);
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string method;
  std::string in;
  bool oracle = false;
  bool timing = false;
};

std::string run_solve(const SolveArgs& a, const Common& common) {
  const VkInstance inst = vk_from_json(read_document(a.in));
  const EnumerationCaps caps = common.caps();
  const auto start = std::chrono::steady_clock::now();
  Solution s;
  if (a.method == "brute") s = solve_bruteforce(inst, caps).solution;
  else if (a.method == "dp") s = solve_dp(inst, caps).solution;
  else if (a.method == "approx") s = approx_sqrt_d(inst, common.seed, caps);
  else if (a.method == "approx-unbounded") s = approx_2unbounded(inst, split_by_boundedness(inst).unbounded, caps);
  else s = approx_lp_rounding(inst, split_by_boundedness(inst).bounded, common.seed, caps);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const Profit value = profit(inst, s);
  Json rec{{"kind", "result"},
           {"method", a.method},
           {"value", value},
           {"items", to_json(s)},
           {"feasible", check_feasible(inst, s)}};
  std::optional<Profit> opt;
  if (a.oracle) {
    opt = solve_bruteforce(inst, caps).value;
    rec["oracle_value"] = *opt;
    rec["ratio"] = *opt == 0 ? 1.0 : double(value) / double(*opt);
  }
  if (a.timing) rec["wall_seconds"] = seconds;
  if (common.format == "json") return dump_document(rec);

  std::ostringstream csv;
  csv << "method,value,items,feasible" << (opt ? ",oracle_value,ratio" : "") << (a.timing ? ",wall_seconds" : "")
      << "\n";
  std::string items;
  for (std::size_t i : s.chosen) items += (items.empty() ? "" : " ") + std::to_string(i);
  csv << a.method << ',' << value << ',' << items << ',' << (rec["feasible"].get<bool>() ? "true" : "false");
  if (opt) csv << ',' << *opt << ',' << rec["ratio"].get<double>();
  if (a.timing) csv << ',' << seconds;
  csv << "\n";
  return csv.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector knapsack reductions, solvers and property checks"};
  app.require_subcommand(1);
  Common common;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"sat", "rcsp", "csp2", "vk"}));
  gen_cmd->add_option("--vertices", gen.vertices);
  gen_cmd->add_option("--edge-probability", gen.edge_probability);
  gen_cmd->add_flag("--regular3", gen.regular3, "3-regular constraint graph");
  gen_cmd->add_flag("--planted", gen.planted, "plant a satisfying assignment (rcsp, csp2)");
  gen_cmd->add_option("--alphabet", gen.alphabet);
  gen_cmd->add_option("--range", gen.range);
  gen_cmd->add_option("--density", gen.density, "probability that a pair is allowed (csp2)");
  gen_cmd->add_option("--variables", gen.variables);
  gen_cmd->add_option("--clauses", gen.clauses);
  gen_cmd->add_option("--max-occurrence", gen.max_occurrence);
  gen_cmd->add_option("--items", gen.items);
  gen_cmd->add_option("--dimensions", gen.dimensions);
  gen_cmd->add_option("--max-budget", gen.max_budget);
  gen_cmd->add_option("--max-profit", gen.max_profit);
  gen_cmd->add_option("--profile", gen.profile, "general, mixed or unbounded (vk)")
      ->check(CLI::IsMember({"general", "mixed", "unbounded"}));
  add_common(gen_cmd, common, false);

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce", "apply a reduction");
  red_cmd->add_option("route", red.route)
      ->required()
      ->check(CLI::IsMember({"sat2rcsp-embed", "sat2rcsp-disperser", "csp2rcsp", "rcsp2vk-simple", "rcsp2vk-embed"}));
  red_cmd->add_option("--in", red.in)->required();
  red_cmd->add_option("--F", red.F, "chunk size of the embed reduction");
  red_cmd->add_option("--k", red.k, "target vertex count");
  red_cmd->add_option("--r", red.r, "disperser union size");
  red_cmd->add_option("--epsilon", red.epsilon, "disperser coverage slack");
  red_cmd->add_option("--subset-size", red.subset_size, "disperser subset size");
  red_cmd->add_option("--artifacts", red.artifacts, "write construction artifacts here");
  add_common(red_cmd, common, false);

  SolveArgs sol;
  auto* sol_cmd = app.add_subcommand("solve", "solve a vk instance");
  sol_cmd->add_option("method", sol.method)
      ->required()
      ->check(CLI::IsMember({"brute", "dp", "approx", "approx-unbounded", "approx-lp"}));
  sol_cmd->add_option("--in", sol.in)->required();
  sol_cmd->add_flag("--oracle", sol.oracle, "also report the brute-force optimum and ratio");
  sol_cmd->add_flag("--timing", sol.timing, "report wall time (output is then not reproducible)");
  add_common(sol_cmd, common, true);

  std::string suite;
  SuiteOptions suite_opt;
  auto* ver_cmd = app.add_subcommand("verify", "run a property suite");
  std::vector<std::string> names;
  for (const auto& [name, fn] : verification_suites()) names.push_back(name);
  ver_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(names));
  ver_cmd->add_option("--count", suite_opt.count, "number of instances (suite default if 0)");
  ver_cmd->add_flag("--corrupt-budget", suite_opt.corrupt_budget, "negative control: lower one budget by 1");
  add_common(ver_cmd, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const bool randomized = *gen_cmd || *ver_cmd || (*red_cmd && red.route == "sat2rcsp-disperser") ||
                            (*sol_cmd && (sol.method == "approx" || sol.method == "approx-lp"));
    if (randomized && !common.seed_given) {
      std::cerr << "error: --seed is required for this command\n";
      return kExitUsage;
    }
    if (*gen_cmd) {
      emit(common, dump_document(run_gen(gen, common)));
    } else if (*red_cmd) {
      emit(common, dump_document(run_reduce(red, common)));
    } else if (*sol_cmd) {
      emit(common, run_solve(sol, common));
    } else {
      suite_opt.seed = common.seed;
      suite_opt.caps = common.caps();
      const VerificationReport report = verification_suites().at(suite)(suite_opt);
      emit(common, common.format == "csv" ? to_csv(report) : dump_document(to_json(report)));
      if (!report.passed()) {
        const CheckRecord* f = report.first_failure();
        std::cerr << "verify " << suite << ": " << report.failures() << " of " << report.records.size()
                  << " checks failed; first: " << f->property << " on " << f->instance << " (expected " << f->expected
                  << ", observed " << f->observed << ")\n";
        return kExitVerify;
      }
    }
  } catch (const SizeError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

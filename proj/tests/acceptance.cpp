// Acceptance checks, one PASS/FAIL line per criterion. Usage: acceptance [N ...]
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "dpcy/groebner.hpp"
#include "dpcy/harness.hpp"
#include "oracles.hpp"

using namespace dpcy;

namespace {

// Genericity: a seeded check must pass at the default seed and at >= 4 of
// the 5 seeds s..s+4.
constexpr int kSweepSeeds = 5;
constexpr int kSweepRequired = 4;

// Wall-clock budgets in milliseconds.
constexpr long kBudgetCaseMs = 10 * 60 * 1000;
constexpr long kBudgetResolutionMs = 30 * 60 * 1000;
constexpr long kBudgetTruncatedMs = 2 * 60 * 1000;

const Registry& registry() {
  static const Registry r = Registry::load(default_registry_path());
  return r;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

void note(const std::string& line) { std::cout << "    " << line << '\n'; }

/// Default-seed run plus a seed sweep for every case of `suite`.
Outcome suite_with_sweep(const std::string& suite, bool seeded, long budget_ms) {
  Outcome out;
  int passed = 0, total = 0;
  for (const auto* c : registry().select(suite)) {
    ++total;
    auto rep = run_case(*c);
    bool ok = report_passed(rep);
    std::string line = c->id + ": " + rep["status"].get<std::string>();
    const long ms = rep.value("wall_ms", 0L);
    if (ms > budget_ms) {
      ok = false;
      line += " over budget (" + std::to_string(ms) + " ms)";
    }
    if (rep.contains("diff"))
      for (const auto& d : rep["diff"])
        line += "; " + d["key"].get<std::string>() + " expected " + d["expected"].dump() + " got " +
                d["computed"].dump();
    if (rep.contains("error")) line += "; " + rep["error"].get<std::string>();
    if (seeded) {
      auto sw = sweep_case(*c, RunOptions{}, kSweepSeeds, kSweepRequired);
      line += "; seeds " + std::to_string(sw["passed"].get<int>()) + "/" + std::to_string(kSweepSeeds);
      ok = ok && sw["status"] == "stable";
    }
    note((ok ? "ok   " : "FAIL ") + line);
    passed += ok;
  }
  out.ok = passed == total && total > 0;
  out.detail = std::to_string(passed) + "/" + std::to_string(total) + " cases";
  return out;
}

Outcome criterion_census() { return suite_with_sweep("census", true, kBudgetCaseMs); }

Outcome criterion_resolution() {
  Outcome out;
  int passed = 0, total = 0;
  for (const auto* c : registry().select("betti")) {
    ++total;
    auto rep = run_case(*c);
    const bool truncated = c->params.contains("degree_bound");
    const long budget = truncated ? kBudgetTruncatedMs : kBudgetResolutionMs;
    const long ms = rep.value("wall_ms", 0L);
    const bool ok = report_passed(rep) && ms <= budget;
    note(std::string(ok ? "ok   " : "FAIL ") + c->id + ": " + rep["status"].get<std::string>() + ", " +
         std::to_string(ms) + " ms (budget " + std::to_string(budget) + " ms)");
    passed += ok;
  }
  out.ok = passed == total && total > 0;
  out.detail = std::to_string(passed) + "/" + std::to_string(total) + " tables";
  return out;
}

Outcome criterion_residual() { return suite_with_sweep("residual", true, kBudgetCaseMs); }
Outcome criterion_nodes() { return suite_with_sweep("nodes", true, kBudgetCaseMs); }
Outcome criterion_graded() { return suite_with_sweep("graded", true, kBudgetCaseMs); }
Outcome criterion_table() { return suite_with_sweep("table1", false, 1000); }

Outcome criterion_properties() {
  Outcome out;
  RunOptions opts;
  opts.properties = true;
  opts.timing = false;
  int checks = 0, violations = 0, nondeterministic = 0;
  for (const auto& c : registry().cases()) {
    auto first = run_case(c, opts);
    auto second = run_case(c, opts);
    if (first.dump() != second.dump()) {
      ++nondeterministic;
      note("FAIL " + c.id + ": reports differ between runs");
    }
    if (first.contains("error") && first["status"] != "degenerate-retry") {
      note("FAIL " + c.id + ": " + first["error"].get<std::string>());
      ++violations;
    }
    if (!first.contains("properties")) continue;
    for (const auto& [k, v] : first["properties"].items()) {
      ++checks;
      if (!v.get<bool>()) {
        ++violations;
        note("FAIL " + c.id + ": " + k);
      }
    }
  }
  out.ok = violations == 0 && nondeterministic == 0 && checks > 0;
  out.detail = std::to_string(checks) + " property checks, " + std::to_string(violations) + " violations, " +
               std::to_string(nondeterministic) + " nondeterministic reports";
  return out;
}

Outcome criterion_oracle() {
  Rng rng(8);
  const char* names[] = {"x", "y", "z"};
  int agree = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = static_cast<int>(rng.between(1, 3));
    const auto order = rng.below(2) ? MonomialOrder::lex() : MonomialOrder::degrevlex();
    auto R = PolyRing<PrimeField>::make(std::vector<std::string>(names, names + n), PrimeField(32003), order);
    auto gens = oracle::random_homogeneous_ideal(R, static_cast<int>(rng.between(1, 4)), 4, rng);
    auto G = reduced_groebner_basis(gens, order);
    auto expect = oracle::staircase_groebner(gens, std::max(G.max_degree(), 4) + 3, R);
    bool same = G.elements().size() == expect.size();
    for (std::size_t i = 0; same && i < expect.size(); ++i) same = G.elements()[i] == expect[i];
    agree += same;
  }
  return {agree == trials, std::to_string(agree) + "/" + std::to_string(trials) + " random ideals"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
      {1, {"census suite", criterion_census}},
      {2, {"resolution suite", criterion_resolution}},
      {3, {"residual suite", criterion_residual}},
      {4, {"node-count suite", criterion_nodes}},
      {5, {"graded-dimension suite", criterion_graded}},
      {6, {"table suite", criterion_table}},
      {7, {"property suites", criterion_properties}},
      {8, {"staircase oracle equivalence", criterion_oracle}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty())
    for (const auto& [k, v] : criteria) selected.push_back(k);

  bool all = true;
  for (int k : selected) {
    auto it = criteria.find(k);
    if (it == criteria.end()) {
      std::cerr << "no criterion " << k << '\n';
      return 2;
    }
    std::cout << "criterion " << k << ": " << it->second.first << '\n';
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", s);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k << " " << it->second.first << ": " << o.detail << " ["
              << buf << "]\n";
    all = all && o.ok;
  }
  return all ? 0 : 1;
}

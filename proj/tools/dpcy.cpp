#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dpcy/harness.hpp"
#include "dpcy/numerology.hpp"

namespace {

using dpcy::Json;

struct Global {
  dpcy::Seed seed = dpcy::kDefaultSeed;
  std::uint32_t prime = dpcy::kDefaultPrime;
  std::string field;
  bool json = false;
  double timeout = 0;
};

dpcy::RunOptions run_options(const Global& g) {
  dpcy::RunOptions o;
  o.seed = g.seed;
  o.prime = g.prime;
  o.rational = g.field == "Q" || g.field == "QQ";
  return o;
}

void print_value(const std::string& key, const Json& v) {
  if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
    std::cout << key << ":\n" << v.get<std::string>();
  } else if (v.is_array() && !v.empty() && v[0].is_string()) {
    std::cout << key << ":\n";
    for (const auto& s : v) std::cout << "  " << s.get<std::string>() << '\n';
  } else {
    std::cout << key << ": " << v.dump() << '\n';
  }
}

int emit(const Json& result, const Global& g) {
  if (g.json) {
    std::cout << result.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : result.items()) print_value(k, v);
  }
  return 0;
}

/// Runs one case in a child process so it can be killed on timeout.
class Child {
 public:
  Child(const dpcy::CaseSpec& spec, const dpcy::RunOptions& opts, bool sweep) : spec_(&spec) {
    char tmpl[] = "/tmp/dpcy-case-XXXXXX";
    const int fd = mkstemp(tmpl);
    if (fd < 0) throw std::runtime_error("cannot create temporary file");
    close(fd);
    path_ = tmpl;
    start_ = std::chrono::steady_clock::now();
    std::cout.flush();
    pid_ = fork();
    if (pid_ < 0) throw std::runtime_error("fork failed");
    if (pid_ == 0) {
      Json r = sweep ? dpcy::sweep_case(spec, opts) : dpcy::run_case(spec, opts);
      std::ofstream(path_) << r.dump();
      std::_Exit(0);
    }
  }

  /// Returns true once finished (or killed).
  bool poll(double timeout_s) {
    int status = 0;
    if (waitpid(pid_, &status, WNOHANG) == pid_) {
      finish(status);
      return true;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (timeout_s > 0 && elapsed > timeout_s) {
      kill(pid_, SIGKILL);
      waitpid(pid_, &status, 0);
      report_ = {{"case_id", spec_->id},
                 {"suite", spec_->suite},
                 {"operation", spec_->operation},
                 {"status", "fail"},
                 {"error", "timed out after " + std::to_string(static_cast<long>(timeout_s)) + " s"}};
      std::remove(path_.c_str());
      return true;
    }
    return false;
  }

  Json take() { return std::move(report_); }

 private:
  void finish(int status) {
    std::ifstream in(path_);
    std::stringstream ss;
    ss << in.rdbuf();
    if (WIFEXITED(status) && WEXITSTATUS(status) == 0 && !ss.str().empty()) {
      report_ = Json::parse(ss.str());
    } else {
      report_ = {{"case_id", spec_->id}, {"status", "fail"}, {"error", "case process crashed"}};
    }
    std::remove(path_.c_str());
  }

  const dpcy::CaseSpec* spec_;
  std::string path_;
  pid_t pid_ = -1;
  std::chrono::steady_clock::time_point start_;
  Json report_;
};

bool case_ok(const Json& r, bool sweep) { return sweep ? r.value("status", "") == "stable" : dpcy::report_passed(r); }

void print_report_line(const Json& r, bool sweep, bool timing) {
  const bool ok = case_ok(r, sweep);
  std::cout << (ok ? "PASS " : "FAIL ") << r.value("case_id", std::string("?"));
  if (sweep) {
    std::cout << "  " << r.value("passed", 0) << "/" << r["runs"].size() << " seeds";
  } else {
    if (r.value("status", std::string()) != "pass" && r.value("status", std::string()) != "fail")
      std::cout << "  [" << r["status"].get<std::string>() << "]";
    if (timing && r.contains("wall_ms")) std::cout << "  " << r["wall_ms"].get<long>() << " ms";
    if (r.value("retries", 0) > 0) std::cout << "  retries=" << r["retries"].get<int>();
  }
  std::cout << '\n';
  if (!ok && !sweep) {
    if (r.contains("error")) std::cout << "    error: " << r["error"].get<std::string>() << '\n';
    if (r.contains("diff"))
      for (const auto& d : r["diff"])
        std::cout << "    " << d["key"].get<std::string>() << ": expected " << d["expected"].dump() << ", got "
                  << d["computed"].dump() << '\n';
    if (r.contains("properties"))
      for (const auto& [k, v] : r["properties"].items())
        if (!v.get<bool>()) std::cout << "    property violated: " << k << '\n';
  }
}

int repro(const Global& g, const std::string& registry_path, const std::string& case_id, const std::string& suite,
          bool sweep, bool properties, bool no_timing, unsigned jobs) {
  const auto registry =
      dpcy::Registry::load(registry_path.empty() ? dpcy::default_registry_path() : std::filesystem::path(registry_path));
  std::vector<const dpcy::CaseSpec*> selected;
  if (!case_id.empty()) {
    selected.push_back(&registry.find(case_id));
  } else {
    selected = registry.select(suite);
    if (selected.empty()) throw dpcy::AlgebraError("no cases in suite '" + suite + "'");
  }
  auto opts = run_options(g);
  opts.properties = properties;
  opts.timing = !no_timing;

  std::vector<Json> reports(selected.size());
  const bool isolate = g.timeout > 0 || jobs > 1;
  if (!isolate) {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      reports[i] = sweep ? dpcy::sweep_case(*selected[i], opts) : dpcy::run_case(*selected[i], opts);
      if (!g.json) print_report_line(reports[i], sweep, opts.timing);
    }
  } else {
    std::vector<std::pair<std::size_t, Child>> running;
    std::size_t next = 0;
    while (next < selected.size() || !running.empty()) {
      while (next < selected.size() && running.size() < std::max(1u, jobs)) {
        running.emplace_back(next, Child(*selected[next], opts, sweep));
        ++next;
      }
      bool progressed = false;
      for (auto it = running.begin(); it != running.end();) {
        if (it->second.poll(g.timeout)) {
          reports[it->first] = it->second.take();
          if (!g.json) print_report_line(reports[it->first], sweep, opts.timing);
          it = running.erase(it);
          progressed = true;
        } else {
          ++it;
        }
      }
      if (!progressed) std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
  }

  std::size_t passed = 0;
  for (const auto& r : reports) passed += case_ok(r, sweep) ? 1 : 0;
  if (g.json) {
    Json out;
    out["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}};
    out["reports"] = reports;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << passed << "/" << reports.size() << " cases passed\n";
  }
  return passed == reports.size() ? 0 : 1;
}

std::vector<int> parse_degrees(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw dpcy::AlgebraError("empty degree list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Del Pezzo surfaces, their projections and the Calabi-Yau threefolds containing them"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--prime", g.prime, "Characteristic of the prime field")->capture_default_str();
  app.add_option("--field", g.field, "Q for exact rational arithmetic");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--timeout", g.timeout, "Per-case time limit in seconds (repro)");

  std::string surface, kind, degrees, ci = "3,3,3";
  int times = 1, cut_degree = 2, degree_bound = -1, gap_degree = 4;

  auto* construct = app.add_subcommand("construct", "Ideal of a named surface");
  construct->add_option("surface", surface, "D6, D7, D8, F1, D6~, ..., K_P, L_P, S_P0, D8-sec3")->required();
  auto* project = app.add_subcommand("project", "Generic projection of D6, D7, D8 or F1");
  project->add_option("kind", kind)->required();
  project->add_option("--times", times)->capture_default_str();
  auto* census = app.add_subcommand("census", "Minimal generators by degree");
  census->add_option("surface", surface)->required();
  auto* betti = app.add_subcommand("betti", "Graded Betti table");
  betti->add_option("surface", surface)->required();
  betti->add_option("--degree-bound", degree_bound);
  auto* residual = app.add_subcommand("residual", "Residual of the cut by low-degree generators");
  residual->add_option("surface", surface)->required();
  residual->add_option("--degree", cut_degree)->capture_default_str();
  auto* nodes = app.add_subcommand("nodes", "Nodes of a general complete intersection through a surface");
  nodes->add_option("surface", surface)->required();
  nodes->add_option("--multidegree", degrees, "Comma-separated degrees")->required();
  auto* link = app.add_subcommand("link", "Surface linked by a complete intersection");
  link->add_option("surface", surface)->required();
  link->add_option("--ci", ci)->capture_default_str();
  link->add_option("--degree", gap_degree)->capture_default_str();
  auto* table1 = app.add_subcommand("table1", "Invariants of the ten Calabi-Yau families");
  auto* repro_cmd = app.add_subcommand("repro", "Run registered reproduction cases");
  std::string case_id, suite, registry;
  bool sweep = false, properties = false, no_timing = false;
  unsigned jobs = 1;
  repro_cmd->add_option("--case", case_id);
  repro_cmd->add_option("--suite", suite, "Suite name; all cases when empty");
  repro_cmd->add_option("--registry", registry);
  repro_cmd->add_flag("--sweep", sweep, "Require >= 4 of seeds s..s+4 to pass");
  repro_cmd->add_flag("--properties", properties, "Also run the property checks");
  repro_cmd->add_flag("--no-timing", no_timing, "Omit wall times");
  repro_cmd->add_option("--jobs", jobs, "Concurrent cases")->capture_default_str();
  repro_cmd->add_flag("--list", [&](std::int64_t) {
    for (const auto& c : dpcy::Registry::load(registry.empty() ? dpcy::default_registry_path() : std::filesystem::path(registry)).cases())
      std::cout << c.id << "  [" << c.suite << "]  " << c.anchor << '\n';
    std::exit(0);
  }, "List cases");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto opts = run_options(g);
    if (*construct) return emit(dpcy::compute("construct", {{"surface", surface}}, opts), g);
    if (*project) return emit(dpcy::compute("project", {{"kind", kind}, {"times", times}}, opts), g);
    if (*census) return emit(dpcy::compute("census", {{"surface", surface}}, opts), g);
    if (*betti) return emit(dpcy::compute("betti", {{"surface", surface}, {"degree_bound", degree_bound}}, opts), g);
    if (*residual)
      return emit(dpcy::compute("residual", {{"surface", surface}, {"cut_degree", cut_degree}}, opts), g);
    if (*nodes)
      return emit(dpcy::compute("nodes", {{"surface", surface}, {"multidegree", parse_degrees(degrees)}}, opts), g);
    if (*link)
      return emit(dpcy::compute("link", {{"surface", surface}, {"ci", parse_degrees(ci)}, {"degree", gap_degree}}, opts),
                  g);
    if (*table1) {
      const auto rows = dpcy::assemble_table1();
      if (!g.json) {
        std::cout << dpcy::table1_text(rows);
        return 0;
      }
      Json out = Json::array();
      for (int r = 1; r <= 10; ++r) out.push_back(dpcy::compute("table1", {{"row", r}}, opts));
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (*repro_cmd) return repro(g, registry, case_id, suite, sweep, properties, no_timing, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

#include "dpcy/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>

#include "dpcy/delpezzo.hpp"
#include "dpcy/groebner.hpp"
#include "dpcy/invariants.hpp"
#include "dpcy/numerology.hpp"
#include "dpcy/parse.hpp"

#ifndef DPCY_DATA_DIR
#define DPCY_DATA_DIR "data"
#endif

namespace dpcy {

namespace {

const std::vector<std::string>& operations() {
  static const std::vector<std::string> ops{"construct", "project",    "census", "betti", "residual", "nodes",
                                            "smooth",    "graded",     "regularity", "link", "table1", "chern"};
  return ops;
}

bool is_tag(const std::string& t) {
  return std::find(std::begin(kProvenanceTags), std::end(kProvenanceTags), t) != std::end(kProvenanceTags);
}

CaseSpec parse_case(const Json& j) {
  if (!j.is_object()) throw AlgebraError("registry entry is not an object");
  CaseSpec c;
  try {
    c.id = j.at("case_id").get<std::string>();
    c.suite = j.at("suite").get<std::string>();
    c.operation = j.at("operation").get<std::string>();
    c.params = j.value("params", Json::object());
    c.expected = j.at("expected");
    c.anchor = j.value("anchor", std::string{});
  } catch (const Json::exception& e) {
    throw AlgebraError(std::string("registry parse error: ") + e.what());
  }
  if (std::find(operations().begin(), operations().end(), c.operation) == operations().end())
    throw AlgebraError("case '" + c.id + "': unknown operation '" + c.operation + "'");
  if (!c.expected.is_object() || c.expected.empty())
    throw AlgebraError("case '" + c.id + "': no expected values");
  for (const auto& [key, v] : c.expected.items()) {
    if (!v.is_object() || !v.contains("value") || !v.contains("tag") || !v["tag"].is_string() ||
        !is_tag(v["tag"].get<std::string>()))
      throw AlgebraError("case '" + c.id + "': expected value '" + key + "' has no provenance tag");
  }
  return c;
}

Json census_json(const GeneratorCensus& c) {
  Json j = Json::object();
  for (auto [d, n] : c) j[std::to_string(d)] = n;
  return j;
}

Json dd_json(const DimensionDegree& dd) { return {{"dimension", dd.dimension}, {"degree", dd.degree}}; }

std::vector<int> int_list(const Json& j) { return j.get<std::vector<int>>(); }

std::string surface_param(const Json& p) {
  if (!p.contains("surface")) throw AlgebraError("missing parameter 'surface'");
  return p["surface"].get<std::string>();
}

template <class F>
struct Computation {
  Json computed = Json::object();
  Json properties = Json::object();
  Seed seed_used = kDefaultSeed;
  int retries = 0;
  std::vector<Attempt> rejected;
};

template <class F>
Ideal<F> surface_for(const Json& params, const RunOptions& opts, const F& field, Computation<F>& out) {
  Retried<Ideal<F>> r = [&] {
    if (params.contains("kind")) {
      ProjectionSpec spec{{parse_surface_kind(params["kind"].get<std::string>()), opts.seed},
                          params.value("times", 1), opts.seed};
      return project_surface(spec, field);
    }
    return named_surface(surface_param(params), opts.seed, field);
  }();
  out.seed_used = r.seed_used;
  out.retries += static_cast<int>(r.rejected.size());
  for (auto& a : r.rejected) out.rejected.push_back(a);
  return std::move(r.value);
}

Json trimmed(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

template <class F>
void surface_properties(const Ideal<F>& I, Computation<F>& out) {
  const auto& G = I.groebner(MonomialOrder::degrevlex());
  out.properties["groebner_post_check"] = buchberger_criterion_holds(G);
  SaturationOptions quick;
  quick.compute_exponent = false;
  out.properties["saturation_fixed_point"] = saturate_irrelevant(I, quick).ideal.same_ideal(I);
  const auto hs = hilbert_series(I);
  const int reg = regularity(I);
  bool agree = true;
  for (int d = reg - 1; d <= reg + 2; ++d) agree = agree && hs.hilbert_function(d) == hs.hilbert_polynomial(d);
  out.properties["hilbert_function_equals_polynomial"] = agree;
}

template <class F>
Computation<F> compute_impl(std::string_view op, const Json& p, const RunOptions& opts, const F& field) {
  Computation<F> out;
  auto& c = out.computed;
  if (op == "construct" || op == "project") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    Json gens = Json::array();
    for (const auto& g : minimal_generators(I)) gens.push_back(to_string(g));
    c["generators"] = gens;
    c["variables"] = I.ring()->names();
    c["census"] = census_json(generator_census(I));
    const auto dd = dimension_degree(I);
    c["dimension"] = dd.dimension;
    c["degree"] = dd.degree;
    if (opts.properties) surface_properties(I, out);
  } else if (op == "census") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    const auto census = generator_census(I);
    c["census"] = census_json(census);
    const auto dd = dimension_degree(I);
    c["dimension"] = dd.dimension;
    c["degree"] = dd.degree;
    if (opts.properties) {
      surface_properties(I, out);
      const auto moved = generic_change_of_coordinates(I, opts.seed + 1000);
      out.properties["census_coordinate_invariance"] = generator_census(moved) == census;
    }
  } else if (op == "betti") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    ResolutionOptions ro;
    ro.degree_bound = p.value("degree_bound", -1);
    const auto B = betti_table(I, ro);
    auto ranks = B.ranks();
    ranks.erase(ranks.begin());
    c["ranks"] = ranks;
    if (ro.degree_bound >= 0) {
      c["degree_bound"] = ro.degree_bound;
      const std::size_t lead = std::min<std::size_t>(2, ranks.size());
      c["leading_ranks"] = std::vector<std::int64_t>(ranks.begin(), ranks.begin() + lead);
    } else {
      c["regularity"] = B.ideal_regularity();
    }
    c["table"] = B.to_string();
    if (opts.properties) {
      surface_properties(I, out);
      if (ro.degree_bound < 0) out.properties["alternating_sum_identity"] =
          trimmed(B.alternating_sum()) == trimmed(hilbert_series(I).numerator);
    }
  } else if (op == "residual") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    const auto rep = multisecant_residual(I, p.at("cut_degree").get<int>());
    c["dimension"] = rep.residual_dd.dimension;
    c["degree"] = rep.residual_dd.degree;
    c["scheme_equality"] = rep.scheme_equality;
    c["saturation_exponent"] = rep.saturation_exponent;
    c["input_census"] = census_json(generator_census(I));
    Json hp = Json::array();
    for (const auto& q : rep.residual_hilbert_polynomial) hp.push_back(q.get_str());
    c["residual_hilbert_polynomial"] = hp;
    if (opts.properties) surface_properties(I, out);
  } else if (op == "nodes") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    const auto md = int_list(p.at("multidegree"));
    auto r = count_nodes(I, md, opts.seed);
    out.retries += static_cast<int>(r.rejected.size());
    for (auto& a : r.rejected) out.rejected.push_back(a);
    const auto& rep = r.value;
    c["multidegree"] = md;
    c["ci_seed"] = r.seed_used;
    c["ci"] = dd_json(rep.ci_dd);
    c["dimension"] = rep.singular_dd.dimension;
    c["nodes"] = rep.nodes();
    c["nodes_on_surface"] = rep.nodes_on_surface;
    c["reduced"] = rep.reduced;
    if (opts.properties) surface_properties(I, out);
  } else if (op == "smooth") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    c["smooth"] = check_smooth_ci(I, int_list(p.at("multidegree")), opts.seed);
  } else if (op == "graded") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    const int d = p.at("degree").get<int>();
    c["degree"] = d;
    c["ideal_dim"] = graded_piece_dimension(I, d);
    if (opts.properties) surface_properties(I, out);
  } else if (op == "regularity") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    c["regularity"] = regularity(I);
    if (opts.properties) surface_properties(I, out);
  } else if (op == "link") {
    const Ideal<F> I = surface_for(p, opts, field, out);
    const auto md = int_list(p.at("ci"));
    const int d = p.value("degree", 4);
    const auto rep = linked_surface(I, md, opts.seed);
    const auto dd = dimension_degree(I);
    c["surface"] = dd_json(dd);
    c["ci"] = dd_json(rep.ci_dd);
    c["linked"] = dd_json(rep.linked_dd);
    c["degree_additivity"] = rep.ci_dd.degree == rep.linked_dd.degree + dd.degree;
    c["gap"] = graded_piece_dimension(rep.linked, d) - graded_piece_dimension(rep.ci_ideal, d);
    c["gap_degree"] = d;
    c["double_link_returns_surface"] = ideal_quotient(rep.ci_ideal, rep.linked).same_ideal(I);
  } else if (op == "table1") {
    const int row = p.at("row").get<int>();
    const auto rows = assemble_table1();
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Table1Row& r) { return r.row == row; });
    if (it == rows.end()) throw AlgebraError("no table row " + std::to_string(row));
    c["row"] = it->row;
    c["d"] = it->d;
    c["ci"] = it->ci.to_string();
    c["nodes"] = it->nodes;
    if (it->published_h3) {
      c["h3"] = it->contraction.g3;
      c["h0"] = it->contraction.h0;
      c["c2g"] = it->contraction.c2g;
      c["chi_x"] = it->chain.chi_x;
      c["chi_y"] = it->chain.chi_y;
    }
    if (it->h12) {
      c["h12_input"] = *it->h12;
      c["chi"] = *it->chi_yt;
      c["smoothing_defect"] = *it->smoothing_defect;
    }
  } else if (op == "chern") {
    const auto inv = ci_chern(CISpec{p.at("ambient_dim").get<int>(), int_list(p.at("multidegree"))});
    c["h3"] = inv.h3;
    c["c2h"] = inv.c2h;
    c["euler"] = inv.euler;
  } else {
    throw AlgebraError("unknown operation '" + std::string(op) + "'");
  }
  return out;
}

struct Outcome {
  Json computed, properties;
  Seed seed_used;
  int retries;
  Json rejected;
};

template <class F>
Outcome to_outcome(Computation<F>&& c) {
  Json rejected = Json::array();
  for (const auto& a : c.rejected) rejected.push_back({{"seed", a.seed}, {"reason", a.reason}});
  return {std::move(c.computed), std::move(c.properties), c.seed_used, c.retries, std::move(rejected)};
}

Outcome dispatch(std::string_view op, const Json& params, const RunOptions& opts) {
  if (opts.rational) return to_outcome(compute_impl(op, params, opts, RationalField{}));
  return to_outcome(compute_impl(op, params, opts, PrimeField(opts.prime)));
}

}  // namespace

Registry Registry::from_json(const Json& doc) {
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("cases")) throw AlgebraError("registry parse error: no 'cases' array");
    list = &doc["cases"];
  }
  if (!list->is_array()) throw AlgebraError("registry parse error: cases must be an array");
  Registry r;
  std::set<std::string> seen;
  for (const auto& j : *list) {
    auto c = parse_case(j);
    if (!seen.insert(c.id).second) throw AlgebraError("duplicate case id '" + c.id + "'");
    r.cases_.push_back(std::move(c));
  }
  return r;
}

Registry Registry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open registry " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw AlgebraError(std::string("registry parse error: ") + e.what());
  }
  return from_json(doc);
}

const CaseSpec& Registry::find(std::string_view id) const {
  for (const auto& c : cases_)
    if (c.id == id) return c;
  throw AlgebraError("unknown case '" + std::string(id) + "'");
}

std::vector<const CaseSpec*> Registry::select(std::string_view suite) const {
  std::vector<const CaseSpec*> out;
  for (const auto& c : cases_)
    if (suite.empty() || c.suite == suite) out.push_back(&c);
  return out;
}

std::vector<std::string> Registry::suites() const {
  std::vector<std::string> out;
  for (const auto& c : cases_)
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  return out;
}

std::filesystem::path default_registry_path() {
  if (const char* env = std::getenv("DPCY_CASES")) return env;
  return std::filesystem::path(DPCY_DATA_DIR) / "cases.json";
}

std::vector<std::string> known_operations() { return operations(); }

Json compute(std::string_view operation, const Json& params, const RunOptions& opts) {
  auto o = dispatch(operation, params, opts);
  Json j = std::move(o.computed);
  if (!o.properties.empty()) j["properties"] = o.properties;
  return j;
}

Json run_case(const CaseSpec& spec, const RunOptions& opts) {
  Json rep;
  rep["case_id"] = spec.id;
  rep["suite"] = spec.suite;
  rep["operation"] = spec.operation;
  rep["params"] = spec.params;
  rep["anchor"] = spec.anchor;
  rep["seed"] = opts.seed;
  rep["field"] = opts.rational ? "QQ" : "ZZ/" + std::to_string(opts.prime);
  Json expected = Json::object();
  for (const auto& [k, v] : spec.expected.items()) expected[k] = v["value"];
  rep["expected"] = expected;

  const auto start = std::chrono::steady_clock::now();
  try {
    auto o = dispatch(spec.operation, spec.params, opts);
    rep["computed"] = o.computed;
    rep["seed_used"] = o.seed_used;
    rep["retries"] = o.retries;
    rep["rejected"] = o.rejected;
    Json diff = Json::array();
    for (const auto& [k, v] : expected.items()) {
      if (!o.computed.contains(k))
        diff.push_back({{"key", k}, {"expected", v}, {"computed", nullptr}});
      else if (o.computed[k] != v)
        diff.push_back({{"key", k}, {"expected", v}, {"computed", o.computed[k]}});
    }
    bool props_ok = true;
    if (opts.properties) {
      rep["properties"] = o.properties;
      for (const auto& [k, v] : o.properties.items()) props_ok = props_ok && v.get<bool>();
    }
    rep["diff"] = diff;
    rep["status"] = diff.empty() && props_ok ? "pass" : "fail";
  } catch (const DegenerateError& e) {
    rep["status"] = "degenerate-retry";
    rep["error"] = e.what();
  } catch (const std::exception& e) {
    rep["status"] = "fail";
    rep["error"] = e.what();
  }
  if (opts.timing) {
    rep["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return rep;
}

Json sweep_case(const CaseSpec& spec, const RunOptions& opts, int seeds, int required) {
  Json runs = Json::array();
  int passed = 0;
  for (int k = 0; k < seeds; ++k) {
    RunOptions o = opts;
    o.seed = opts.seed + static_cast<Seed>(k);
    auto r = run_case(spec, o);
    passed += report_passed(r) ? 1 : 0;
    runs.push_back(std::move(r));
  }
  return {{"case_id", spec.id},
          {"seeds", Json::array({opts.seed, opts.seed + static_cast<Seed>(seeds - 1)})},
          {"passed", passed},
          {"required", required},
          {"status", passed >= required ? "stable" : "unstable"},
          {"runs", runs}};
}

bool report_passed(const Json& report) {
  return report.contains("status") && report["status"] == "pass";
}

}  // namespace dpcy

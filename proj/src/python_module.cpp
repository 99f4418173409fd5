#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dpcy/harness.hpp"
#include "dpcy/numerology.hpp"

namespace py = pybind11;
using dpcy::Json;

namespace {

dpcy::RunOptions options(dpcy::Seed seed, std::uint32_t prime, bool rational) {
  dpcy::RunOptions o;
  o.seed = seed;
  o.prime = prime;
  o.rational = rational;
  return o;
}

const dpcy::Registry& registry() {
  static const dpcy::Registry r = dpcy::Registry::load(dpcy::default_registry_path());
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Computations on del Pezzo surfaces and their projections";
  py::register_exception<dpcy::AlgebraError>(m, "AlgebraError", PyExc_ValueError);

  m.def(
      "compute_json",
      [](const std::string& operation, const std::string& params, dpcy::Seed seed, std::uint32_t prime,
         bool rational) {
        Json p = Json::parse(params);
        py::gil_scoped_release release;
        return dpcy::compute(operation, p, options(seed, prime, rational)).dump();
      },
      py::arg("operation"), py::arg("params"), py::arg("seed") = dpcy::kDefaultSeed,
      py::arg("prime") = dpcy::kDefaultPrime, py::arg("rational") = false);

  m.def(
      "run_case_json",
      [](const std::string& id, dpcy::Seed seed, std::uint32_t prime, bool timing) {
        const auto& spec = registry().find(id);
        auto o = options(seed, prime, false);
        o.timing = timing;
        py::gil_scoped_release release;
        return dpcy::run_case(spec, o).dump();
      },
      py::arg("case_id"), py::arg("seed") = dpcy::kDefaultSeed, py::arg("prime") = dpcy::kDefaultPrime,
      py::arg("timing") = true);

  m.def("case_ids", [](const std::string& suite) {
    std::vector<std::string> ids;
    for (const auto* c : registry().select(suite)) ids.push_back(c->id);
    return ids;
  }, py::arg("suite") = "");

  m.def(
      "ci_chern",
      [](int n, const std::vector<int>& degrees) {
        auto c = dpcy::ci_chern({n, degrees});
        return py::make_tuple(c.h3, c.c2h, c.euler);
      },
      py::arg("ambient_dim"), py::arg("multidegree"));

  m.def("table1_text", [] { return dpcy::table1_text(dpcy::assemble_table1()); });
  m.attr("DEFAULT_SEED") = dpcy::kDefaultSeed;
  m.attr("DEFAULT_PRIME") = dpcy::kDefaultPrime;
}

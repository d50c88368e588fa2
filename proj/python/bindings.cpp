#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilcent/record.hpp"
#include "nilcent/rootsys.hpp"
#include "nilcent/verify.hpp"

namespace py = pybind11;
using namespace nilcent;

namespace {

std::string component_group(const std::string& algebra, const std::string& orbit, const std::string& representative,
                            const std::string& route, size_t budget, bool timing) {
  OrbitQuery q;
  q.algebra = algebra;
  q.orbit = orbit;
  q.representative_file = representative;
  q.route = parse_route(route);
  q.budget = budget;
  if (q.orbit.empty() && q.representative_file.empty())
    throw std::invalid_argument("give an orbit label or a representative file");
  py::gil_scoped_release release;
  return record_to_json(compute_record(q), timing);
}

std::vector<std::string> table(const std::string& algebra) {
  std::vector<std::string> out;
  for (const auto& r : nontrivial_records(algebra)) out.push_back(record_to_json(r));
  return out;
}

std::vector<std::string> diff_reference(const std::string& algebra) {
  auto ref = builtin_table(algebra);
  if (ref.empty()) throw std::invalid_argument("no reference table shipped for " + algebra);
  return diff_table(nontrivial_records(algebra), ref);
}

std::pair<std::string, int> verify(const std::vector<std::string>& suites, const std::string& algebra, bool stretch) {
  std::vector<CriterionResult> results;
  if (!algebra.empty()) {
    results = verify_algebra(algebra);
  } else {
    VerifyOptions opt;
    opt.stretch = stretch;
    for (const auto& s : suites)
      for (auto& r : run_suite(s, opt)) results.push_back(std::move(r));
  }
  return {report_json(results), exit_code(results)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Component groups of centralizers of nilpotent elements";

  m.def("component_group", &component_group, py::arg("algebra"), py::arg("orbit") = "",
        py::arg("representative") = "", py::arg("route") = "auto", py::arg("budget") = 0, py::arg("timing") = false,
        "Orbit record as JSON text");
  m.def("orbit_labels", &orbit_labels, py::arg("algebra"));
  m.def("table", &table, py::arg("algebra"), "JSON records of the orbits with a nontrivial component group");
  m.def("diff_reference", &diff_reference, py::arg("algebra"));
  m.def("suite_names", &suite_names);
  m.def("verify", &verify, py::arg("suites"), py::arg("algebra") = "", py::arg("stretch") = false,
        "(report JSON, exit code)");
  m.def("cartan_matrix", &cartan_from_label, py::arg("label"));
  m.def("canonical_type_label", py::overload_cast<const std::string&>(&canonical_type_label), py::arg("label"));
  m.def("num_positive_roots", [](const std::string& label) { return RootSystem::from_label(label).num_positive(); },
        py::arg("label"));
  m.def("data_dir", &data_dir);
}

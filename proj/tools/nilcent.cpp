#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "nilcent/record.hpp"
#include "nilcent/verify.hpp"

using namespace nilcent;

namespace {

int exit_for(const std::vector<OrbitRecord>& records) {
  for (const auto& r : records)
    if (!r.ok()) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Component groups of centralizers of nilpotent elements"};
  app.require_subcommand(1);

  auto* orbits = app.add_subcommand("orbits", "List nilpotent orbits with representatives");
  std::string orb_alg, orb_out;
  unsigned seed = 1;
  orbits->add_option("--algebra", orb_alg, "Simple type, e.g. F4, or a classical label such as B3")->required();
  orbits->add_option("--out", orb_out, "Write a freshly enumerated orbit fixture to this file");
  orbits->add_option("--seed", seed, "Seed for generic coefficients");

  auto* cg = app.add_subcommand("component-group", "Component group of Z_G(h,e,f) for one orbit");
  OrbitQuery query;
  std::string route = "auto", out_dir = "results";
  size_t jobs = 1;
  bool timing = false, no_store = false;
  cg->add_option("--algebra", query.algebra, "Algebra label (G2, F4, E6, B2, C3, so(7), ...)")->required();
  auto* orbit_opt = cg->add_option("--orbit", query.orbit, "Bala-Carter label, or a partition for classical labels");
  auto* rep_opt = cg->add_option("--representative", query.representative_file,
                                 "Orbit JSON (Chevalley models) or matrix triple JSON (classical route)");
  orbit_opt->excludes(rep_opt);
  cg->add_option("--route", route, "auto, classical, conjugacy or doublecent");
  cg->add_option("--jobs", jobs, "Worker budget (orbits run one at a time)");
  cg->add_option("--budget", query.budget, "Maximal number of (u,v,pi) triples for the doublecent route");
  cg->add_option("--out", out_dir, "Result store directory");
  cg->add_flag("--no-store", no_store, "Do not persist the record");
  cg->add_flag("--timing", timing, "Include wall-clock seconds in the output");

  auto* tables = app.add_subcommand("tables", "Rows for all orbits with a nontrivial component group");
  std::string tab_alg;
  bool diff_paper = false, tab_json = false;
  tables->add_option("--algebra", tab_alg, "Algebra label")->required();
  tables->add_flag("--diff-paper", diff_paper, "Compare with the shipped reference table");
  tables->add_flag("--json", tab_json, "Emit the records as JSON");

  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  std::vector<std::string> suites;
  std::string ver_alg;
  bool stretch = false;
  verify->add_option("--suite", suites, "classical, exceptional-structural, exceptional-groups, properties, stretch");
  verify->add_option("--algebra", ver_alg, "Checks for a single algebra");
  verify->add_flag("--stretch", stretch, "Include the F4(a3) Bruhat cell run");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*orbits) {
      if (auto series = classical_series(orb_alg)) {
        for (const auto& p : classical_partitions(series->n, series->kind)) std::cout << partition_label(p) << "\n";
        return 0;
      }
      auto g = LieAlgebra::from_type(orb_alg);
      bool shipped = orb_out.empty() && std::ifstream(data_dir() + "/orbits/" + orb_alg + ".json").good();
      auto reps = shipped ? builtin_orbits(orb_alg) : enumerate_orbits(*g, seed);
      if (!orb_out.empty()) save_orbit_file(orb_out, reps);
      for (const auto& r : reps) {
        std::cout << r.label << "  dim " << r.dim << "  wdd";
        for (auto x : r.wdd) std::cout << " " << x;
        std::cout << "  terms " << r.terms.size() << "\n";
      }
      return 0;
    }
    if (*cg) {
      if (jobs == 0) throw std::invalid_argument("--jobs must be positive");
      if (query.orbit.empty() && query.representative_file.empty())
        throw std::invalid_argument("give --orbit or --representative");
      query.route = parse_route(route);
      OrbitRecord r = compute_record(query);
      if (!no_store) {
        std::string path = ResultStore(out_dir).save(r);
        std::cerr << "stored " << path << "\n";
      }
      std::cout << record_to_json(r, timing) << "\n";
      return r.ok() ? 0 : 2;
    }
    if (*tables) {
      auto rows = nontrivial_records(tab_alg);
      if (tab_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(nlohmann::json::parse(record_to_json(r)));
        std::cout << nlohmann::json{{"schema", "nilcent.table-records/1"}, {"algebra", tab_alg}, {"rows", arr}}.dump(1)
                  << "\n";
      } else {
        std::cout << render_table(rows);
      }
      if (diff_paper) {
        auto ref = builtin_table(tab_alg);
        if (ref.empty()) throw std::invalid_argument("no reference table shipped for " + tab_alg);
        auto diffs = diff_table(rows, ref);
        for (const auto& d : diffs) std::cout << "DIFF " << d << "\n";
        if (diffs.empty()) std::cout << "MATCH " << ref.size() << " rows\n";
        if (!diffs.empty()) return 1;
      }
      return exit_for(rows);
    }
    if (*verify) {
      std::vector<CriterionResult> results;
      if (!ver_alg.empty()) {
        results = verify_algebra(ver_alg);
      } else {
        if (suites.empty()) suites = {"classical", "exceptional-structural", "exceptional-groups", "properties"};
        VerifyOptions opt;
        opt.stretch = stretch;
        for (const auto& s : suites)
          for (auto& r : run_suite(s, opt)) results.push_back(std::move(r));
      }
      std::cout << report_json(results) << "\n";
      return exit_code(results);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

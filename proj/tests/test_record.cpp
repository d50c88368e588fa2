#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "nilcent/record.hpp"

using namespace nilcent;

namespace {

OrbitQuery query(const std::string& algebra, const std::string& orbit, Route route = Route::Auto) {
  OrbitQuery q;
  q.algebra = algebra;
  q.orbit = orbit;
  q.route = route;
  return q;
}

}  // namespace

TEST_CASE("labels and partitions") {
  CHECK(classical_series("B2")->n == 5);
  CHECK(classical_series("C3")->kind == FormKind::Alternating);
  CHECK(classical_series("D4")->n == 8);
  CHECK(classical_series("so(7)")->n == 7);
  CHECK(classical_series("sp(6)")->n == 6);
  CHECK_FALSE(classical_series("sp(5)"));
  CHECK_FALSE(classical_series("F4"));
  CHECK_FALSE(classical_series("D2"));
  CHECK(parse_partition("3,1,1") == std::vector<size_t>{3, 1, 1});
  CHECK(parse_partition("[3,1,1]") == std::vector<size_t>{3, 1, 1});
  CHECK(parse_partition("2+2") == std::vector<size_t>{2, 2});
  CHECK_FALSE(parse_partition("A2"));
  CHECK_FALSE(parse_partition("3,,1"));
  CHECK_FALSE(parse_partition("0,1"));
  CHECK(partition_label({3, 1, 1}) == "[3,1,1]");
  CHECK(parse_route("doublecent") == Route::Doublecent);
  CHECK_THROWS_AS(parse_route("fast"), std::invalid_argument);
}

TEST_CASE("routing") {
  CHECK(compute_record(query("G2", "G2(a1)")).route == "conjugacy");
  CHECK(compute_record(query("F4", "B2")).route == "doublecent");
  CHECK(compute_record(query("B2", "3,1,1")).route == "classical");
  CHECK_THROWS_AS(compute_record(query("F4", "A2", Route::Classical)), std::invalid_argument);
  CHECK_THROWS_AS(compute_record(query("F4", "A2", Route::Conjugacy)), std::invalid_argument);
  CHECK_THROWS_AS(compute_record(query("B2", "[3,1,1]", Route::Doublecent)), std::invalid_argument);
  CHECK_THROWS_AS(compute_record(query("F4", "X5")), std::invalid_argument);
  CHECK_THROWS_AS(compute_record(query("B2", "[2,1,1,1]")), std::invalid_argument);
}

TEST_CASE("both routes agree on a distinguished orbit") {
  auto a = compute_record(query("F4", "F4(a2)", Route::Conjugacy));
  auto b = compute_record(query("F4", "F4(a2)", Route::Doublecent));
  CHECK(a.group.label == "C2");
  CHECK(b.group.label == "C2");
  CHECK(a.group.elements == b.group.elements);
}

TEST_CASE("classical records carry both groups") {
  OrbitQuery q;
  q.algebra = "B2";
  q.representative_file = data_dir() + "/classical/B2-example.json";
  auto r = compute_record(q);
  CHECK(r.orbit == "[3,1,1]");
  REQUIRE(r.hat_group.has_value());
  CHECK(r.hat_group->label == "C2×C2");
  CHECK(r.group.label == "C2");
  CHECK(r.generators.size() == 1);
  CHECK(r.hat_generators.size() == 2);
  CHECK(r.fixture_hash.size() == 16);
}

TEST_CASE("records are deterministic") {
  auto a = compute_record(query("E6", "A2"));
  auto b = compute_record(query("E6", "A2"));
  CHECK(record_to_json(a) == record_to_json(b));
  CHECK(record_to_json(a).find("\"seconds\"") == std::string::npos);
  CHECK(record_to_json(a, true).find("\"seconds\"") != std::string::npos);
}

TEST_CASE("closure verification and the result store") {
  auto r = compute_record(query("G2", "G2(a1)"));
  CHECK(verify_closure(r.group));
  CHECK(r.group.order() == 6);
  auto gens = minimal_generators(r.group);
  CHECK(gens.size() == 2);

  auto dir = std::filesystem::temp_directory_path() / "nilcent-store-test";
  std::filesystem::remove_all(dir);
  ResultStore store(dir.string());
  std::string path = store.save(r);
  CHECK(std::filesystem::exists(path));
  auto back = store.load(r.algebra, r.orbit, r.route, r.fixture_hash);
  REQUIRE(back.has_value());
  CHECK(*back == record_to_json(r) + "\n");

  OrbitRecord bad = r;
  std::swap(bad.group.table[1][1], bad.group.table[1][2]);
  CHECK_FALSE(verify_closure(bad.group));
  bad.fixture_hash = "0000000000000000";
  CHECK_THROWS_AS(store.save(bad), std::logic_error);
  CHECK_FALSE(store.load(bad.algebra, bad.orbit, bad.route, bad.fixture_hash).has_value());
  OrbitRecord mislabelled = r;
  mislabelled.group.label = "C6";
  CHECK_FALSE(verify_closure(mislabelled.group));
  std::filesystem::remove_all(dir);
}

TEST_CASE("an exhausted budget is reported as inconclusive") {
  auto q = query("E6", "D4(a1)");
  q.budget = 5;
  auto r = compute_record(q);
  CHECK(r.status == "INCONCLUSIVE");
  CHECK_FALSE(r.ok());
  CHECK(r.diagnostics.back().find("budget") != std::string::npos);
}

TEST_CASE("tables and the reference diff") {
  auto rows = nontrivial_records("G2");
  REQUIRE(rows.size() == 1);
  CHECK(diff_table(rows, builtin_table("G2")).empty());
  CHECK(render_table(rows).find("G2(a1) | 0 | 0 | G2 | - | S3") != std::string::npos);
  auto ref = builtin_table("G2");
  ref[0].group = "C2";
  CHECK(diff_table(rows, ref).size() == 1);
  CHECK(orbit_labels("A1").size() == 2);
  CHECK(orbit_labels("C2").size() == 4);
}

TEST_CASE("fnv1a") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

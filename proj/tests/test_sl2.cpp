#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nilcent/sl2.hpp"

using namespace nilcent;

namespace {

/// Product of a few exp(ad c x_r) for random roots r and small c.
QMatrix random_inner(const LieAlgebra& g, std::mt19937_64& rng, int factors = 3) {
  const auto& rs = g.chevalley().rs;
  std::uniform_int_distribution<size_t> root(0, rs.num_roots() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  QMatrix m = QMatrix::identity(g.dim());
  for (int k = 0; k < factors; ++k) {
    int c = coef(rng);
    if (c == 0) c = 1;
    m = exp_ad(g, scale(Rational(c), g.root_vector(root(rng)))) * m;
  }
  return m;
}

Sl2Triple transform(const QMatrix& m, const Sl2Triple& t) { return {m.apply(t.h), m.apply(t.e), m.apply(t.f), t.label}; }

}  // namespace

TEST_CASE("Jacobson-Morozov on small examples") {
  auto a1 = LieAlgebra::from_type("A1");
  auto sg = standard_generators(*a1);
  auto t = jacobson_morozov(*a1, sg.x[0]);
  CHECK(t.h == sg.h[0]);
  CHECK(t.f == sg.y[0]);
  CHECK(weighted_dynkin_diagram(*a1, t) == IVec{2});

  auto b2 = LieAlgebra::from_type("B2");
  const auto& rs = b2->chevalley().rs;
  QVec e = b2->root_vector(rs.num_positive() - 1);
  auto tb = jacobson_morozov(*b2, e);
  CHECK(is_sl2_triple(*b2, tb.h, tb.e, tb.f));
  CHECK(b2->cartan_coords(tb.h).has_value());

  CHECK_THROWS_AS(jacobson_morozov(*a1, sg.h[0]), std::invalid_argument);
  auto zero = jacobson_morozov(*b2, QVec(b2->dim()));
  CHECK(weighted_dynkin_diagram(*b2, zero) == IVec{0, 0});
}

TEST_CASE("orbit enumeration for the exceptional fixtures") {
  // number of nilpotent orbits (including zero) per type
  std::vector<std::pair<const char*, size_t>> counts = {{"G2", 5}, {"F4", 16}, {"E6", 21}};
  for (auto [alg, count] : counts) {
    CAPTURE(alg);
    auto reps = builtin_orbits(alg);
    CHECK(reps.size() == count);
    std::set<IVec> wdds;
    for (const auto& r : reps) wdds.insert(r.wdd);
    CHECK(wdds.size() == count);
  }
  // every label that appears in the published component group tables is present
  std::vector<std::pair<const char*, std::vector<const char*>>> labels = {
      {"G2", {"G2(a1)"}},
      {"F4", {"~A1", "A2", "B2", "C3(a1)", "F4(a3)", "F4(a2)", "F4(a1)"}},
      {"E6", {"A2", "D4(a1)", "E6(a3)"}}};
  for (const auto& [alg, ls] : labels)
    for (const char* l : ls) {
      CAPTURE(l);
      CHECK(builtin_orbit(alg, l).has_value());
    }
}

TEST_CASE("fixture representatives: triples, diagrams and orbit dimensions") {
  std::mt19937_64 rng(11);
  for (const char* alg : {"G2", "F4", "E6"}) {
    auto g = LieAlgebra::from_type(alg);
    for (const auto& r : builtin_orbits(alg)) {
      CAPTURE(r.label);
      QVec e = r.element(*g);
      Sl2Triple t = jacobson_morozov(*g, e);
      CHECK(is_sl2_triple(*g, t.h, t.e, t.f));
      CHECK(has_characteristic(*g, r.wdd, e));
      CHECK(g->cartan_coords(t.h).has_value());
      CHECK(standard_torus_is_maximal(*g, t));
      // dimension from the grading agrees with dim g - dim z(e)
      size_t zdim = centralizer(*g, {e}).size();
      CHECK(orbit_dimension(*g, r.wdd) == g->dim() - zdim);
      CHECK(r.dim == g->dim() - zdim);
      // the diagram is recovered after moving the triple off the Cartan subalgebra
      if (std::string(alg) != "E6" || r.label == "D4(a1)") {
        Sl2Triple moved = transform(random_inner(*g, rng), t);
        CHECK(weighted_dynkin_diagram(*g, moved) == r.wdd);
      }
    }
  }
}

TEST_CASE("G2(a1) has a trivial reductive centralizer") {
  auto g = LieAlgebra::from_type("G2");
  auto r = builtin_orbit("G2", "G2(a1)");
  REQUIRE(r.has_value());
  Sl2Triple t = jacobson_morozov(*g, r->element(*g));
  CHECK(centralizer(*g, {t.h, t.e, t.f}).empty());
}

TEST_CASE("weighted Dynkin diagrams are invariant under inner automorphisms") {
  std::mt19937_64 rng(3);
  auto g = LieAlgebra::from_type("G2");
  for (const auto& r : builtin_orbits("G2")) {
    CAPTURE(r.label);
    Sl2Triple t = jacobson_morozov(*g, r.element(*g));
    for (int it = 0; it < 50; ++it) CHECK(weighted_dynkin_diagram(*g, transform(random_inner(*g, rng), t)) == r.wdd);
  }
  auto f4 = LieAlgebra::from_type("F4");
  auto r = builtin_orbit("F4", "F4(a3)");
  REQUIRE(r.has_value());
  Sl2Triple t = jacobson_morozov(*f4, r->element(*f4));
  for (int it = 0; it < 50; ++it) CHECK(weighted_dynkin_diagram(*f4, transform(random_inner(*f4, rng), t)) == r->wdd);
}

TEST_CASE("spectral and conjugation routes give the same diagram") {
  std::mt19937_64 rng(21);
  for (const char* alg : {"G2", "F4"}) {
    auto g = LieAlgebra::from_type(alg);
    for (const auto& r : builtin_orbits(alg)) {
      CAPTURE(r.label);
      Sl2Triple t = jacobson_morozov(*g, r.element(*g));
      Sl2Triple moved = transform(random_inner(*g, rng, 1), t);
      CHECK(weighted_dynkin_diagram_by_conjugation(*g, moved) == r.wdd);
      CHECK(weighted_dynkin_diagram(*g, moved) == r.wdd);
    }
  }
}

TEST_CASE("same_orbit") {
  std::mt19937_64 rng(8);
  auto g = LieAlgebra::from_type("G2");
  auto reg = jacobson_morozov(*g, builtin_orbit("G2", "G2")->element(*g));
  auto sub = jacobson_morozov(*g, builtin_orbit("G2", "G2(a1)")->element(*g));
  auto zero = jacobson_morozov(*g, QVec(g->dim()));
  CHECK(same_orbit(*g, reg, reg));
  CHECK_FALSE(same_orbit(*g, reg, zero));
  CHECK_FALSE(same_orbit(*g, reg, sub));
  CHECK(same_orbit(*g, transform(random_inner(*g, rng), sub), transform(random_inner(*g, rng), sub)));
}

TEST_CASE("representative JSON round trip") {
  OrbitRepresentative r;
  r.algebra = "F4";
  r.label = "F4(a3)";
  r.terms = {{{0, 1, 0, 0}, Rational(1)}, {{1, 1, 1, 0}, Rational(-3, 2)}};
  r.wdd = {0, 2, 0, 0};
  r.dim = 40;
  auto back = orbit_from_json(orbit_to_json(r));
  CHECK(back.algebra == r.algebra);
  CHECK(back.label == r.label);
  CHECK(back.terms == r.terms);
  CHECK(back.wdd == r.wdd);
  CHECK(back.dim == 40);
  auto p = orbit_from_json(R"({"algebra":"G2","label":"A1","e":[{"root":[3,2],"coeff":"1/2"}]})");
  CHECK(p.terms[0].second == Rational(1, 2));
}

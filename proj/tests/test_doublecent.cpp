#include <doctest.h>

#include <algorithm>

#include "nilcent/doublecent.hpp"

using namespace nilcent;

namespace {

Sl2Triple fixture(const LieAlgebra& g, const std::string& algebra, const std::string& label) {
  auto rep = builtin_orbit(algebra, label);
  REQUIRE(rep.has_value());
  return jacobson_morozov(g, rep->element(g));
}

CartanMatrix block(const CartanMatrix& c, size_t from, size_t to) {
  CartanMatrix out(to - from, std::vector<int>(to - from));
  for (size_t i = from; i < to; ++i)
    for (size_t j = from; j < to; ++j) out[i - from][j - from] = c[i][j];
  return out;
}

/// Table entries write the group of order two as S2.
std::string normalized_group(const std::string& g) { return g == "S2" ? "C2" : g; }

std::string type_or_zero(const std::string& t) { return t.empty() ? "0" : t; }

/// Checks the structural columns of a table row against a fresh decomposition.
void check_row(const LieAlgebra& g, const std::string& algebra, const TableRow& row) {
  CAPTURE(row.label);
  auto t = fixture(g, algebra, row.label);
  auto cp = centralizer_pair(g, t);
  CHECK(cp.d() == row.d);
  auto md = killing_complement(g, cp);
  CHECK(type_or_zero(md.type1) == row.c1);
  CHECK(type_or_zero(md.type2) == row.c2);
  auto c1 = block(md.gens.cartan, 0, md.rank1);
  auto c2 = block(md.gens.cartan, md.rank1, md.s());
  if (row.c1 != "0") CHECK(c1 == cartan_from_label(row.c1));
  if (row.c2 != "0") CHECK(c2 == cartan_from_label(row.c2));
  CHECK(same_weight_table(weight_rows(md), row.weights, c1, c2));
}

}  // namespace

TEST_CASE("table fixtures load") {
  for (const char* a : {"G2", "F4", "E6"}) {
    CAPTURE(a);
    CHECK_FALSE(builtin_table(a).empty());
  }
  CHECK(builtin_table("A3").empty());
}

TEST_CASE("structural rows for E6") {
  auto g = LieAlgebra::from_type("E6");
  for (const auto& row : builtin_table("E6")) check_row(*g, "E6", row);
}

TEST_CASE("structural rows for F4") {
  auto g = LieAlgebra::from_type("F4");
  for (const auto& row : builtin_table("F4")) check_row(*g, "F4", row);
}

TEST_CASE("structural rows for G2") {
  auto g = LieAlgebra::from_type("G2");
  for (const auto& row : builtin_table("G2")) check_row(*g, "G2", row);
}

TEST_CASE("E6 D4(a1) worked example") {
  auto g = LieAlgebra::from_type("E6");
  auto t = fixture(*g, "E6", "D4(a1)");
  auto cp = centralizer_pair(*g, t);
  CHECK(cp.c1.size() == 2);
  CHECK(cp.d() == 2);
  auto md = killing_complement(*g, cp);
  REQUIRE(md.m() == 6);
  CHECK(md.type2 == "D4");
  auto rc = restriction_candidates(*g, cp, md);
  REQUIRE_FALSE(rc.inconclusive);
  CHECK(rc.theta.size() == 1);
  CHECK(rc.eta.size() == 6);

  TableRow ref;
  for (const auto& r : builtin_table("E6"))
    if (r.label == "D4(a1)") ref = r;
  auto al = table_alignments(md, ref.weights);
  REQUIRE_FALSE(al.empty());
  // triality 1 -> 4 -> 3 -> 1 on the Bourbaki nodes of D4
  const std::vector<int> tau{3, 1, 0, 2};
  const std::vector<size_t> expected_pi{5, 4, 1, 0, 2, 3};
  QMatrix expected_a(2, 2);
  expected_a(0, 0) = Rational(-1, 2);
  expected_a(0, 1) = Rational(1, 2);
  expected_a(1, 0) = Rational(-3, 2);
  expected_a(1, 1) = Rational(-1, 2);
  for (const auto& [order, change] : al) {
    ModuleDecomposition mdp = md;
    reorder_summands(mdp, order);
    change_torus_basis(*g, mdp, change);
    REQUIRE(same_weight_table(weight_rows(mdp), ref.weights, {}, md.gens.cartan));
    CHECK(pinned_indices(mdp) == std::vector<size_t>{0, 2});
    size_t tau_cosets = 0;
    for (size_t v = 0; v < rc.eta.size(); ++v) {
      BarredData bd = barred_data(*g, mdp, rc.theta[0], rc.eta[v]);
      auto pis = permutation_candidates(mdp, bd);
      CHECK(pis.size() == 8);
      if (rc.eta_outer[v] != tau) continue;
      ++tau_cosets;
      std::vector<std::vector<size_t>> inner_pi;
      for (const auto& pi : pis) {
        auto a = torus_restriction(mdp, pi);
        if (!a) continue;
        auto ext = extension_solve(*g, mdp, bd, pi, *a);
        REQUIRE(ext.status == SolutionSet::Status::Solved);
        CHECK(ext.sigmas.size() == 1);
        for (const auto& sg : ext.sigmas) {
          CHECK(sg.certified);
          if (!is_inner(*g, sg.m)) continue;
          inner_pi.push_back(pi);
          CHECK(*a == expected_a);
        }
      }
      REQUIRE(inner_pi.size() == 1);
      CHECK(inner_pi.front() == expected_pi);
    }
    CHECK(tau_cosets == 1);
  }
}

TEST_CASE("E6 D4(a1) component group is S3") {
  auto g = LieAlgebra::from_type("E6");
  auto res = component_group_doublecent(*g, fixture(*g, "E6", "D4(a1)"));
  CHECK_FALSE(res.inconclusive);
  CHECK(res.statuses.size() == 48);
  size_t solved = 0;
  for (const auto& st : res.statuses) solved += st.solutions;
  CHECK(solved == 6);
  CHECK(res.group.order() == 6);
  CHECK(res.group.label == "S3");
}

TEST_CASE("component groups of the exceptional table rows") {
  for (const char* alg : {"G2", "F4", "E6"}) {
    auto g = LieAlgebra::from_type(alg);
    for (const auto& row : builtin_table(alg)) {
      CAPTURE(alg);
      CAPTURE(row.label);
      auto res = component_group_doublecent(*g, fixture(*g, alg, row.label));
      CHECK_FALSE(res.inconclusive);
      CHECK(res.group.label == normalized_group(row.group));
      for (const auto& c : res.candidates) CHECK(is_inner(*g, c));
    }
  }
}

TEST_CASE("F4(a3) has 24 inner extensions") {
  auto g = LieAlgebra::from_type("F4");
  auto res = component_group_doublecent(*g, fixture(*g, "F4", "F4(a3)"));
  CHECK(res.candidates.size() == 24);
  CHECK(res.group.label == "S4");
}

TEST_CASE("zero orbit gives the trivial group") {
  auto g = LieAlgebra::from_type("G2");
  Sl2Triple zero{QVec(g->dim()), QVec(g->dim()), QVec(g->dim()), "0"};
  auto res = component_group_doublecent(*g, zero);
  CHECK(res.group.order() == 1);
}

TEST_CASE("centralizer pair invariants over F4") {
  auto g = LieAlgebra::from_type("F4");
  for (const auto& rep : builtin_orbits("F4")) {
    CAPTURE(rep.label);
    auto t = jacobson_morozov(*g, rep.element(*g));
    if (is_zero_vec(t.e)) continue;
    auto cp = centralizer_pair(*g, t);
    CHECK(cp.c.size() + cp.perp.size() == g->dim());
    CHECK(cp.c1d.size() + cp.c2d.size() + cp.t.size() == cp.c.size());
    for (const auto& x : cp.c1)
      for (const auto& y : cp.c2) CHECK(is_zero_vec(g->bracket(x, y)));
    // h, e, f lie in the derived part of c2
    Subspace s = cp.c2d;
    s.push_back(t.e);
    CHECK(rank(QMatrix::from_columns(s, g->dim())) == cp.c2d.size());
  }
}

TEST_CASE("distinguished orbits agree with the Bruhat cell search") {
  for (auto [alg, label] : {std::pair{"G2", "G2(a1)"}, std::pair{"F4", "F4(a3)"}, std::pair{"E6", "E6(a3)"}}) {
    CAPTURE(label);
    auto g = LieAlgebra::from_type(alg);
    auto t = fixture(*g, alg, label);
    auto cells = finite_stabilizer(*g, t);
    REQUIRE_FALSE(cells.inconclusive);
    auto res = component_group_doublecent(*g, t);
    CHECK(cells.elements.size() == res.group.order());
    for (const auto& c : res.candidates) {
      bool found = false;
      for (const auto& e : cells.elements) found = found || e == c;
      CHECK(found);
    }
  }
}

#include <doctest.h>

#include <random>

#include "nilcent/liealg.hpp"

using namespace nilcent;

namespace {

QVec random_element(const LieAlgebra& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  QVec v(g.dim());
  for (auto& x : v) x = Rational(d(rng));
  return v;
}

}  // namespace

TEST_CASE("Chevalley models have the expected dimensions") {
  std::vector<std::pair<const char*, size_t>> rows = {{"A1", 3},  {"A2", 8},  {"B2", 10}, {"B3", 21},
                                                      {"C3", 21}, {"D4", 28}, {"G2", 14}, {"F4", 52},
                                                      {"E6", 78}, {"A1+A2", 11}, {"2A1", 6}};
  for (auto [l, d] : rows) {
    CAPTURE(l);
    auto g = LieAlgebra::from_type(l);
    CHECK(g->dim() == d);
    CHECK(g->has_chevalley());
  }
}

TEST_CASE("antisymmetry and Jacobi identity") {
  for (const char* l : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "2A1", "A1+B2", "F4", "E6"}) {
    CAPTURE(l);
    auto g = LieAlgebra::from_type(l);
    CHECK(g->check_antisymmetry());
    CHECK(g->check_jacobi());
  }
}

TEST_CASE("structure constants are integral") {
  for (const char* l : {"B3", "C3", "G2", "F4", "E6"}) {
    CAPTURE(l);
    auto g = LieAlgebra::from_type(l);
    bool integral = true;
    for (size_t i = 0; i < g->dim(); ++i)
      for (size_t j = 0; j < g->dim(); ++j)
        for (const auto& [k, v] : g->bracket_basis(i, j))
          if (!v.is_integer()) integral = false;
    CHECK(integral);
  }
}

TEST_CASE("canonical generator relations") {
  for (const char* l : {"A3", "B3", "C3", "D4", "G2", "F4", "E6", "A1+A2"}) {
    CAPTURE(l);
    auto g = LieAlgebra::from_type(l);
    auto sg = standard_generators(*g);
    size_t r = sg.rank();
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) {
        CHECK(is_zero_vec(g->bracket(sg.h[i], sg.h[j])));
        QVec xy = g->bracket(sg.x[i], sg.y[j]);
        CHECK(xy == (i == j ? sg.h[i] : QVec(g->dim())));
        Rational c(sg.cartan[i][j]);
        CHECK(g->bracket(sg.h[j], sg.x[i]) == scale(c, sg.x[i]));
        CHECK(g->bracket(sg.h[j], sg.y[i]) == scale(-c, sg.y[i]));
      }
  }
}

TEST_CASE("Killing form is invariant and matches the trace form on sl2") {
  std::mt19937_64 rng(5);
  for (const char* l : {"A2", "B2", "G2", "D4"}) {
    auto g = LieAlgebra::from_type(l);
    for (int it = 0; it < 10; ++it) {
      QVec x = random_element(*g, rng), y = random_element(*g, rng), z = random_element(*g, rng);
      CHECK(g->killing(g->bracket(x, y), z) == g->killing(x, g->bracket(y, z)));
    }
  }
  auto a1 = LieAlgebra::from_type("A1");
  auto sg = standard_generators(*a1);
  // tr(ad h)^2 = 2^2 + (-2)^2 for h = diag(1,-1)
  CHECK(a1->killing(sg.h[0], sg.h[0]) == Rational(8));
  CHECK(a1->killing(sg.x[0], sg.y[0]) == Rational(4));
  // sl3: kappa(h1, h1) = 2n tr(h1 h1) = 6 * 2
  auto a2 = LieAlgebra::from_type("A2");
  CHECK(a2->killing(a2->cartan_vector(0), a2->cartan_vector(0)) == Rational(12));
}

TEST_CASE("exponentials of root vectors are automorphisms") {
  for (const char* l : {"B2", "G2", "A3"}) {
    auto g = LieAlgebra::from_type(l);
    const auto& cd = g->chevalley();
    for (size_t r = 0; r < cd.rs.num_roots(); r += 3) {
      KMatrix e = exp_ad(*g, g->root_vector(r)).cast<Cyclotomic>();
      CHECK(certify_automorphism(*g, e, generating_set(*g)));
    }
  }
}

TEST_CASE("inner and outer automorphisms by two routes") {
  auto a2 = LieAlgebra::from_type("A2");
  KMatrix swap = diagram_automorphism(*a2, {1, 0}).cast<Cyclotomic>();
  CHECK(certify_automorphism(*a2, swap, generating_set(*a2)));
  CHECK_FALSE(is_inner(*a2, swap));
  CHECK_FALSE(is_inner_by_rank(*a2, swap));
  const auto& cd = a2->chevalley();
  QVec x = a2->root_vector(0), y = a2->root_vector(cd.npos());
  QMatrix sdot = exp_ad(*a2, x) * exp_ad(*a2, scale(Rational(-1), y)) * exp_ad(*a2, x);
  KMatrix sk = sdot.cast<Cyclotomic>();
  CHECK(is_inner(*a2, sk));
  CHECK(is_inner_by_rank(*a2, sk));
  CHECK_FALSE(is_inner(*a2, sk * swap));
  CHECK_FALSE(is_inner_by_rank(*a2, sk * swap));

  auto d4 = LieAlgebra::from_type("D4");
  std::vector<int> tri = {2, 1, 3, 0};
  KMatrix t = diagram_automorphism(*d4, tri).cast<Cyclotomic>();
  CHECK(outer_class(*d4, t) == tri);
  CHECK_FALSE(is_inner_by_rank(*d4, t));
  QVec xd = d4->root_vector(4);
  KMatrix u = exp_ad(*d4, xd).cast<Cyclotomic>();
  CHECK(outer_class(*d4, u * t) == tri);
  CHECK(is_inner(*d4, u));

  auto e6 = LieAlgebra::from_type("E6");
  std::vector<int> flip = {5, 1, 4, 3, 2, 0};
  CHECK(outer_class(*e6, diagram_automorphism(*e6, flip).cast<Cyclotomic>()) == flip);
}

TEST_CASE("torus elements of order three are inner") {
  auto g2 = LieAlgebra::from_type("G2");
  const auto& cd = g2->chevalley();
  // act on x_r by zeta^{<r, alpha_1^vee>}
  Cyclotomic z = Cyclotomic::root_of_unity(3);
  KMatrix t = KMatrix::identity(g2->dim());
  for (size_t r = 0; r < cd.rs.num_roots(); ++r) {
    long long p = cd.rs.pairing(cd.rs.root(r), 0);
    t(r, r) = Cyclotomic::root_of_unity(3, static_cast<int>(((p % 3) + 3) % 3));
  }
  CHECK(certify_automorphism(*g2, t, generating_set(*g2)));
  CHECK(finite_order(t) == 3);
  CHECK(is_inner_by_rank(*g2, t));
  CHECK(is_inner(*g2, t));
  (void)z;
}

TEST_CASE("folding agrees with the generic model construction") {
  // rebuild B3 and G2 from their own canonical generators found generically
  for (const char* l : {"B3", "G2", "C3"}) {
    CAPTURE(l);
    auto g = LieAlgebra::from_type(l);
    Subspace all;
    for (size_t i = 0; i < g->dim(); ++i) all.push_back(g->basis_vector(i));
    auto gens = canonical_generators(*g, all, {});
    CHECK(gens.type() == std::string(l));
    Model m = build_model(*g, gens);
    bool same = true;
    for (size_t i = 0; i < g->dim(); ++i)
      for (size_t j = 0; j < g->dim(); ++j)
        if (m.algebra->bracket_basis(i, j) != g->bracket_basis(i, j)) same = false;
    CHECK(same);
  }
}

TEST_CASE("conjugating a semisimple element into the Cartan subalgebra") {
  for (const char* l : {"A2", "B2", "G2", "D4"}) {
    CAPTURE(l);
    auto g = LieAlgebra::from_type(l);
    const auto& rs = g->chevalley().rs;
    CoVec h0(rs.rank());
    for (size_t i = 0; i < h0.size(); ++i) h0[i] = Rational(static_cast<long long>(i + 1));
    QMatrix mv = exp_ad(*g, g->root_vector(0)) * exp_ad(*g, scale(Rational(2), g->root_vector(rs.num_positive() + rs.num_positive() - 1)));
    QVec h = mv.apply(g->cartan_element(h0));
    REQUIRE_FALSE(g->cartan_coords(h).has_value());
    auto cc = conjugate_into_cartan(*g, h);
    CHECK(cc.alpha.certified);
    CHECK(is_inner(*g, cc.alpha.m));
    CHECK(dominant_representative(rs, cc.h_cartan).h == dominant_representative(rs, h0).h);
  }
}

TEST_CASE("centralizers and reductive decomposition") {
  auto g = LieAlgebra::from_type("A2");
  auto sg = standard_generators(*g);
  // a1(h1) = 2, a2(h1) = -1: no root vanishes on h1
  CHECK(centralizer(*g, {sg.h[0]}).size() == 2);
  // h1 + 2 h2 kills a1 only, so the centralizer is gl2
  QVec h = sg.h[0];
  axpy(h, Rational(2), sg.h[1]);
  Subspace c = centralizer(*g, {h});
  CHECK(c.size() == 4);
  auto d = reductive_decompose(*g, c);
  CHECK(d.derived.size() == 3);
  CHECK(d.center.size() == 1);
}

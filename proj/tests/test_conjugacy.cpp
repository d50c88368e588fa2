#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "nilcent/conjugacy.hpp"

using namespace nilcent;

namespace {

KMatrix kexp(const LieAlgebra& g, const QVec& x, const Cyclotomic& c) { return exp_ad<Cyclotomic>(g, scale(c, to_k(x))); }

/// w_i(t) = exp(t ad x) exp(-t^{-1} ad y) exp(t ad x).
KMatrix w_of(const LieAlgebra& g, const QVec& x, const QVec& y, const Cyclotomic& t) {
  return kexp(g, x, t) * kexp(g, y, -t.inverse()) * kexp(g, x, t);
}

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

KMatrix kinv(const KMatrix& m) {
  auto i = inverse(m);
  REQUIRE(i.has_value());
  return *i;
}

Sl2Triple transform(const QMatrix& m, const Sl2Triple& t) { return {m.apply(t.h), m.apply(t.e), m.apply(t.f), t.label}; }

bool maps(const KMatrix& a, const Sl2Triple& s, const Sl2Triple& t) {
  return a.apply(to_k(s.h)) == to_k(t.h) && a.apply(to_k(s.e)) == to_k(t.e) && a.apply(to_k(s.f)) == to_k(t.f);
}

bool member(const std::vector<KMatrix>& list, const KMatrix& m) {
  return std::any_of(list.begin(), list.end(), [&](const KMatrix& x) { return x.data() == m.data(); });
}

int order_of(const KMatrix& m) {
  KMatrix p = m;
  for (int k = 1; k <= 64; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return -1;
}

Sl2Triple fixture(const LieAlgebra& g, const std::string& algebra, const std::string& label) {
  auto rep = builtin_orbit(algebra, label);
  REQUIRE(rep.has_value());
  return jacobson_morozov(g, rep->element(g));
}

}  // namespace

TEST_CASE("torus parametrization matches w(t) w(1)^{-1}") {
  for (const char* type : {"A2", "B2", "G2"}) {
    CAPTURE(type);
    auto g = LieAlgebra::from_type(type);
    auto gens = standard_generators(*g);
    CellGroup grp = centralizer_cell_group(*g, CoVec(g->chevalley().rs.rank()));
    REQUIRE(grp.cells().size() == weyl_group_words(g->chevalley().rs).size());
    for (size_t i = 0; i < gens.rank(); ++i)
      for (long long t : {2LL, -3LL}) {
        Cyclotomic tc{Rational(t)};
        KMatrix expected = w_of(*g, gens.x[i], gens.y[i], tc) * kinv(w_of(*g, gens.x[i], gens.y[i], Cyclotomic(1)));
        std::vector<Cyclotomic> ts(gens.rank(), Cyclotomic(1));
        ts[i] = tc;
        CHECK(grp.torus_element(ts).data() == expected.data());
      }
  }
}

TEST_CASE("symbolic cell application agrees with the numeric element") {
  auto g = LieAlgebra::from_type("B2");
  CellGroup grp = centralizer_cell_group(*g, CoVec(2));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> small(-2, 2);
  for (const auto& cell : grp.cells()) {
    CAPTURE(cell.word.size());
    auto p = grp.params(cell);
    std::vector<Cyclotomic> pt(p.vars.size());
    for (size_t k = 0; k < p.t.size(); ++k) {
      int t = small(rng);
      if (t == 0) t = 3;
      pt[p.t[k]] = Cyclotomic(Rational(t));
      pt[p.a[k]] = Cyclotomic(Rational(1, t));
    }
    for (size_t v : p.u) pt[v] = Cyclotomic(Rational(small(rng)));
    for (size_t v : p.s) pt[v] = Cyclotomic(Rational(small(rng)));
    KMatrix m = grp.element(cell, p, pt);
    for (size_t b = 0; b < g->dim(); b += 3) {
      std::vector<QPoly> v;
      for (size_t i = 0; i < g->dim(); ++i) v.push_back(QPoly::constant(Rational(i == b ? 1 : 0)));
      auto img = grp.apply<Rational>(cell, p, v);
      auto pre = grp.apply_inverse<Rational>(cell, p, v);
      KVec num(g->dim()), numpre(g->dim());
      for (size_t i = 0; i < g->dim(); ++i) {
        num[i] = to_k(img[i]).eval(pt);
        numpre[i] = to_k(pre[i]).eval(pt);
      }
      CHECK(num == m.col(b));
      CHECK(m.apply(numpre) == to_k(g->basis_vector(b)));
    }
    // the cell word maps exactly the inversion set to negative roots
    CHECK(cell.inversions.size() == cell.word.size());
  }
}

TEST_CASE("conjugate_cartan_pair") {
  auto a1 = LieAlgebra::from_type("A1");
  auto tau = conjugate_cartan_pair(*a1, CoVec{Rational(-1)}, CoVec{Rational(1)});
  REQUIRE(tau.has_value());
  auto s = standard_generators(*a1);
  CHECK(*tau == weyl_representative(*a1, s.x[0], s.y[0]));
  auto same = conjugate_cartan_pair(*a1, CoVec{Rational(1)}, CoVec{Rational(1)});
  REQUIRE(same.has_value());
  CHECK(same->is_identity());

  auto b2 = LieAlgebra::from_type("B2");
  const auto& rs = b2->chevalley().rs;
  auto words = weyl_group_words(rs);
  CHECK(words.size() == 8);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
  CoVec dom{Rational(3), Rational(2)};
  for (int trial = 0; trial < 20; ++trial) {
    CoVec h1 = apply_word(rs, dom, words[pick(rng)]);
    CoVec h2 = apply_word(rs, dom, words[pick(rng)]);
    auto t = conjugate_cartan_pair(*b2, h1, h2);
    REQUIRE(t.has_value());
    CHECK(t->apply(b2->cartan_element(h1)) == b2->cartan_element(h2));
    CHECK(certify_automorphism(*b2, t->cast<Cyclotomic>(), generating_set(*b2)));
  }
  // the W-orbit of dom has 8 points; an element outside it is rejected
  std::map<CoVec, int> orbit;
  for (const auto& w : words) orbit[apply_word(rs, dom, w)] = 1;
  CHECK(orbit.size() == 8);
  CHECK_FALSE(conjugate_cartan_pair(*b2, dom, CoVec{Rational(2), Rational(3)}).has_value());
}

TEST_CASE("cell systems") {
  auto b2 = LieAlgebra::from_type("B2");
  auto e = b2->root_vector(0);
  auto t = jacobson_morozov(*b2, e);
  auto h = b2->cartan_coords(t.h);
  REQUIRE(h.has_value());
  CellGroup grp = centralizer_cell_group(*b2, *h);
  const auto& id = grp.cells().front();
  CHECK(id.word.empty());
  auto sys = bruhat_system(grp, id, {t.e}, {to_k(t.e)});
  std::vector<Cyclotomic> pt(sys.params.vars.size());
  for (size_t v : sys.params.t) pt[v] = Cyclotomic(1);
  for (size_t v : sys.params.a) pt[v] = Cyclotomic(1);
  for (const auto& p : sys.polys) CHECK(p.eval(pt).is_zero());

  auto a2 = LieAlgebra::from_type("A2");
  auto reg = jacobson_morozov(*a2, a2->root_vector(0) + a2->root_vector(1));
  auto hr = a2->cartan_coords(reg.h);
  REQUIRE(hr.has_value());
  CellGroup torus = centralizer_cell_group(*a2, *hr);
  REQUIRE(torus.cells().size() == 1);
  CHECK(torus.num_positive() == 0);
  auto ts = bruhat_system(torus, torus.cells()[0], {reg.e}, {to_k(reg.e)});
  CHECK(ts.params.u.empty());
  CHECK(ts.params.s.empty());
  CHECK(ts.params.vars.size() == 4);
}

TEST_CASE("finite stabilizer of G2(a1) is S3") {
  auto g2 = LieAlgebra::from_type("G2");
  auto t = fixture(*g2, "G2", "G2(a1)");
  auto res = finite_stabilizer(*g2, t);
  REQUIRE_FALSE(res.inconclusive);
  CHECK(res.cells.size() == 2);
  REQUIRE(res.elements.size() == 6);
  std::map<int, int> orders;
  bool abelian = true;
  for (const auto& a : res.elements) {
    CHECK(maps(a, t, t));
    ++orders[order_of(a)];
    for (const auto& b : res.elements) {
      CHECK(member(res.elements, a * b));
      if ((a * b).data() != (b * a).data()) abelian = false;
    }
  }
  CHECK_FALSE(abelian);
  CHECK(orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});

  auto inv = order2_search(*g2, t);
  CHECK_FALSE(inv.inconclusive);
  CHECK(inv.elements.size() == 4);
  for (const auto& a : inv.elements) {
    CHECK(member(res.elements, a));
    CHECK((a * a).is_identity());
  }
  // G2 has no diagram symmetries
  CHECK(outer_stabilizer(*g2, t).elements.empty());
}

TEST_CASE("find_conjugator round trips") {
  std::mt19937_64 rng(7);
  auto b2 = LieAlgebra::from_type("B2");
  for (size_t r : {0UL, 1UL, 2UL}) {
    auto t1 = jacobson_morozov(*b2, b2->root_vector(r));
    auto t2 = transform(random_inner(*b2, rng), t1);
    KMatrix s = find_conjugator(*b2, t1, t2);
    CHECK(maps(s, t1, t2));
  }
  auto reg = jacobson_morozov(*b2, b2->root_vector(0) + b2->root_vector(1));
  auto reg2 = transform(random_inner(*b2, rng, 4), reg);
  CHECK(maps(find_conjugator(*b2, reg, reg2), reg, reg2));

  auto g2 = LieAlgebra::from_type("G2");
  auto t = fixture(*g2, "G2", "G2(a1)");
  auto t2 = transform(random_inner(*g2, rng), t);
  CHECK(maps(find_conjugator(*g2, t, t2), t, t2));
  auto same = find_conjugator(*g2, t, t);
  CHECK(maps(same, t, t));
}

TEST_CASE("outer stabilizer of the regular nilpotent in A2") {
  auto a2 = LieAlgebra::from_type("A2");
  auto t = jacobson_morozov(*a2, a2->root_vector(0) + a2->root_vector(1));
  auto inner = finite_stabilizer(*a2, t);
  REQUIRE_FALSE(inner.inconclusive);
  CHECK(inner.elements.size() == 1);
  auto outer = outer_stabilizer(*a2, t);
  REQUIRE(outer.elements.size() == 1);
  CHECK(maps(outer.elements[0], t, t));
  CHECK_FALSE(is_inner(*a2, outer.elements[0]));
}

TEST_CASE("identity component membership") {
  auto a1 = LieAlgebra::from_type("A1");
  auto gens = standard_generators(*a1);
  KMatrix id = KMatrix::identity(3);
  Subspace whole = {a1->basis_vector(0), a1->basis_vector(1), a1->basis_vector(2)};
  CHECK(in_identity_component(*a1, id, whole) == Membership::Yes);
  CHECK(in_identity_component(*a1, exp_ad(*a1, gens.x[0]).cast<Cyclotomic>(), whole) == Membership::Yes);
  CHECK(in_identity_component(*a1, id, {}) == Membership::Yes);
  CHECK(in_identity_component(*a1, exp_ad(*a1, gens.x[0]).cast<Cyclotomic>(), {}) == Membership::No);

  Subspace torus = {gens.h[0]};
  QMatrix sdot = weyl_representative(*a1, gens.x[0], gens.y[0]);
  CHECK(in_identity_component(*a1, sdot.cast<Cyclotomic>(), torus) == Membership::No);
  CellGroup tg = reductive_cell_group(*a1, torus);
  CHECK(in_identity_component(*a1, tg.torus_element({Cyclotomic(Rational(5))}), torus) == Membership::Yes);

  auto b2 = LieAlgebra::from_type("B2");
  auto t = jacobson_morozov(*b2, b2->root_vector(3));
  Subspace c = centralizer(*b2, {t.h, t.e, t.f});
  REQUIRE_FALSE(c.empty());
  auto cg = canonical_generators(*b2, c);
  REQUIRE(cg.rank() == 1);
  KMatrix s = (exp_ad(*b2, cg.x[0]) * exp_ad(*b2, scale(Rational(-2), cg.y[0]))).cast<Cyclotomic>();
  CHECK(maps(s, t, t));
  CHECK(in_identity_component(*b2, s, c) == Membership::Yes);

  CHECK(in_identity_component_cells(*b2, s, c) == Membership::Yes);
}

TEST_CASE("membership routes agree on finite-order elements") {
  // torus of A2 acting on A2: elements of the normalizer either lie in the torus or not
  auto a2 = LieAlgebra::from_type("A2");
  auto gens = standard_generators(*a2);
  Subspace torus = {gens.h[0], gens.h[1]};
  CellGroup tg = reductive_cell_group(*a2, torus);
  std::vector<KMatrix> candidates = {
      KMatrix::identity(a2->dim()), tg.torus_element({Cyclotomic(-1), Cyclotomic(1)}),
      weyl_representative(*a2, gens.x[0], gens.y[0]).cast<Cyclotomic>(),
      diagram_automorphism(*a2, {1, 0}).cast<Cyclotomic>()};
  std::vector<Membership> expected = {Membership::Yes, Membership::Yes, Membership::No, Membership::No};
  for (size_t i = 0; i < candidates.size(); ++i) {
    CAPTURE(i);
    CHECK(in_identity_component(*a2, candidates[i], torus) == expected[i]);
    CHECK(in_identity_component_cells(*a2, candidates[i], torus) == expected[i]);
  }
  // the Levi subalgebra gl2 inside A2: the Weyl element of its root lies in it
  Subspace levi = {gens.h[0], gens.h[1], gens.x[0], gens.y[0]};
  auto w = weyl_representative(*a2, gens.x[0], gens.y[0]).cast<Cyclotomic>();
  CHECK(in_identity_component(*a2, w, levi) == Membership::Yes);
  CHECK(in_identity_component_cells(*a2, w, levi) == Membership::Yes);
  auto w2 = weyl_representative(*a2, gens.x[1], gens.y[1]).cast<Cyclotomic>();
  CHECK(in_identity_component(*a2, w2, levi) == Membership::No);
  CHECK(in_identity_component_cells(*a2, w2, levi) == Membership::No);
}

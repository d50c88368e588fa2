#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "nilcent/groebner.hpp"

using namespace nilcent;

namespace {

QPoly qp(const std::string& s, VarRegistry& v, MonoOrder o = MonoOrder::DegRevLex) { return *to_q(parse_poly(s, v, o)); }

std::vector<std::string> strs(const std::vector<QPoly>& p, const VarRegistry& v) {
  std::vector<std::string> out;
  for (const auto& f : p) out.push_back(f.str(&v));
  return out;
}

bool vanishes(const std::vector<QPoly>& p, const std::vector<Rational>& pt) {
  for (const auto& f : p)
    if (!f.eval(pt).is_zero()) return false;
  return true;
}

std::set<std::vector<Rational>> rational_solutions(const SolutionSet& s) {
  std::set<std::vector<Rational>> out;
  for (const auto& sol : s.solutions) {
    std::vector<Rational> r;
    for (const auto& x : sol) {
      if (!x.is_rational()) return {};
      r.push_back(x.rational());
    }
    out.insert(r);
  }
  return out;
}

bool has_nonzero_constant_for_test(const std::vector<QPoly>& p) {
  return std::any_of(p.begin(), p.end(), [](const QPoly& f) { return !f.is_zero() && f.is_constant(); });
}

}  // namespace

TEST_CASE("parse and print round trip") {
  VarRegistry v;
  KPoly p = parse_poly("2*x^2*y - 1/3*z + z4*y - (x - 1)*(x + 1)", v);
  CHECK(v.size() == 3);
  KPoly q = parse_poly(p.str(&v), v);
  CHECK(p == q);
  CHECK(to_q(p) == std::nullopt);
  CHECK(parse_poly("x^2 - 1", v).str(&v) == "x^2 - 1");
  CHECK_THROWS(parse_poly("x + * y", v));
}

TEST_CASE("small Groebner bases") {
  VarRegistry v;
  auto one = buchberger<Rational>({qp("x - 1", v)});
  REQUIRE(one.complete);
  CHECK(strs(one.basis, v) == std::vector<std::string>{"x - 1"});

  auto two = buchberger<Rational>({qp("x^2 - 1", v), qp("x - 1", v)});
  CHECK(strs(two.basis, v) == std::vector<std::string>{"x - 1"});

  VarRegistry w;
  w.add("x");
  w.add("y");
  auto lex = buchberger<Rational>({qp("x*y - 1", w, MonoOrder::Lex), qp("y^2 - 1", w, MonoOrder::Lex)});
  CHECK(strs(lex.basis, w) == std::vector<std::string>{"y^2 - 1", "x - y"});

  auto unit = buchberger<Rational>({qp("x*y - 1", w), qp("x", w)});
  CHECK(strs(unit.basis, w) == std::vector<std::string>{"1"});
}

TEST_CASE("Groebner basis of a cyclic system and FGLM") {
  VarRegistry v;
  for (const char* n : {"x", "y", "z"}) v.add(n);
  std::vector<QPoly> g = {qp("x + y + z", v), qp("x*y + y*z + z*x", v), qp("x*y*z - 1", v)};
  auto gb = buchberger(g);
  REQUIRE(gb.complete);
  CHECK(is_groebner_basis(gb.basis));
  for (const auto& f : g) CHECK(normal_form(f, gb.basis).is_zero());
  auto sm = standard_monomials(gb.basis, 3, 100);
  REQUIRE(sm.has_value());
  CHECK(sm->size() == 6);
  auto lex = fglm_to_lex(gb.basis, 3);
  REQUIRE(lex.complete);
  CHECK(is_groebner_basis(lex.basis));
  std::vector<QPoly> direct;
  for (const auto& f : g) direct.push_back(f.with_order(MonoOrder::Lex));
  auto lexdirect = buchberger(direct);
  CHECK(strs(lex.basis, v) == strs(lexdirect.basis, v));
  CHECK(strs(lex.basis, v).front() == "z^3 - 1");
}

TEST_CASE("budget exhaustion is reported") {
  VarRegistry v;
  for (const char* n : {"x", "y", "z"}) v.add(n);
  std::vector<QPoly> g = {qp("x^2*y - z", v), qp("x*y^2 - 1", v), qp("x*y*z - 2", v), qp("x*z^2 - y", v)};
  GroebnerOptions tiny;
  tiny.max_pairs = 1;
  auto r = buchberger(g, tiny);
  CHECK_FALSE(r.complete);
  CHECK(!r.reason.empty());
}

TEST_CASE("reduce_set") {
  VarRegistry v;
  for (const char* n : {"x", "y"}) v.add(n);
  auto r = reduce_set<Rational>({qp("x^2 - 1", v), qp("x - 1", v)});
  CHECK(strs(r, v) == std::vector<std::string>{"x - 1"});
  auto r2 = reduce_set<Rational>({qp("x*y - 1", v), qp("x", v)});
  CHECK(strs(r2, v) == std::vector<std::string>{"1"});
  auto r3 = reduce_set<Rational>({qp("x*y - 1", v), qp("y^2 - 1", v)});
  CHECK(r3.size() == 2);
  for (size_t i = 0; i < r3.size(); ++i)
    for (size_t j = 0; j < r3.size(); ++j)
      if (i != j) CHECK_FALSE(r3[i].lm().divides(r3[j].lm()));
  auto r4 = reduce_set<Rational>({qp("x", v), qp("x + y", v)});
  auto r5 = reduce_set<Rational>({qp("x + y", v), qp("x", v)});
  CHECK(strs(r4, v) == std::vector<std::string>{"y", "x"});
  CHECK(strs(r5, v) == strs(r4, v));
  CHECK(strs(reduce_set<Rational>({qp("x^2", v), qp("x", v)}), v) == std::vector<std::string>{"x"});

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<QPoly> ps;
    for (int k = 0; k < 5; ++k) {
      std::string s = "0";
      for (int t = 0; t < 3; ++t)
        s += " + (" + std::to_string(coef(rng)) + ")*x^" + std::to_string(expo(rng)) + "*y^" + std::to_string(expo(rng));
      ps.push_back(qp(s, v));
    }
    auto red = reduce_set(ps);
    for (size_t i = 0; i < red.size(); ++i)
      for (size_t j = 0; j < red.size(); ++j)
        if (i != j) CHECK_FALSE(red[i].lm().divides(red[j].lm()));
    // same ideal: equal reduced Groebner bases
    CHECK(strs(buchberger(red).basis, v) == strs(buchberger(ps).basis, v));
  }
}

TEST_CASE("square roots and cyclotomic root finding") {
  for (long long q : {2LL, -1LL, 3LL, -3LL, 5LL, 6LL, -7LL, 12LL, 8LL}) {
    CAPTURE(q);
    auto s = cyclotomic_sqrt(Rational(q));
    REQUIRE(s.has_value());
    CHECK(*s * *s == Cyclotomic(Rational(q)));
  }
  auto s = cyclotomic_sqrt(Rational(9, 4));
  REQUIRE(s.has_value());
  CHECK(s->is_rational());
  CHECK(abs(s->rational().to_mpq()) == mpq_class(3, 2));
  CHECK_FALSE(cyclotomic_sqrt(Rational(101)).has_value());

  using KU = UPoly<Cyclotomic>;
  auto r = cyclotomic_roots(KU({Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)}));  // x^2 + 1
  CHECK(r.complete());
  CHECK(r.roots.size() == 2);
  for (const auto& x : r.roots) CHECK(x.conductor() == 4);
  auto r6 = cyclotomic_roots(KU({Cyclotomic(-1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(0), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)}));
  CHECK(r6.roots.size() == 6);
  auto rq = cyclotomic_roots(KU({Cyclotomic(-2), Cyclotomic(0), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)}));  // x^4 - 2
  CHECK_FALSE(rq.complete());
}

TEST_CASE("zero-dimensional solving") {
  PolySystem s;
  s.vars.add("x");
  s.polys = {qp("x^2 - 1", s.vars)};
  auto r = solve_zero_dim(s);
  CHECK(r.status == SolutionSet::Status::Solved);
  CHECK(rational_solutions(r) == std::set<std::vector<Rational>>{{Rational(-1)}, {Rational(1)}});

  PolySystem i;
  i.vars.add("x");
  i.polys = {qp("x^2 + 1", i.vars)};
  auto ri = solve_zero_dim(i);
  REQUIRE(ri.status == SolutionSet::Status::Solved);
  CHECK(ri.solutions.size() == 2);
  for (const auto& sol : ri.solutions) CHECK(sol[0].conductor() == 4);

  PolySystem u;
  u.vars.add("x");
  u.vars.add("y");
  u.polys = {qp("x*y - 1", u.vars), qp("x", u.vars)};
  CHECK(solve_zero_dim(u).status == SolutionSet::Status::Unsat);

  PolySystem pos;
  pos.vars.add("x");
  pos.vars.add("y");
  pos.polys = {qp("x*y - 1", pos.vars)};
  CHECK(solve_zero_dim(pos).inconclusive());

  PolySystem irr;
  irr.vars.add("x");
  irr.polys = {qp("x^3 - 2", irr.vars)};
  CHECK(solve_zero_dim(irr).inconclusive());

  PolySystem inv;
  size_t t = inv.vars.add("t");
  inv.polys = {qp("t^2 - 4", inv.vars)};
  inv.add_inverse(t);
  auto rv = solve_zero_dim(inv);
  CHECK(rv.solutions.size() == 2);
}

TEST_CASE("solutions re-substitute and do not depend on the input order") {
  PolySystem s;
  for (const char* n : {"x", "y", "z"}) s.vars.add(n);
  s.polys = {qp("x^2 + y^2 - 2", s.vars), qp("x - y", s.vars), qp("z^2 - x*y", s.vars), qp("z^3 - z", s.vars)};
  auto a = solve_with_splitting(s);
  REQUIRE(a.status == SolutionSet::Status::Solved);
  for (const auto& sol : a.solutions)
    for (const auto& p : s.polys) CHECK(to_k(p).eval(sol).is_zero());
  std::reverse(s.polys.begin(), s.polys.end());
  auto b = solve_with_splitting(s);
  CHECK(rational_solutions(a) == rational_solutions(b));
  CHECK(rational_solutions(a).size() == 4);
}

TEST_CASE("factor_split and solving against a grid oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    CAPTURE(trial);
    size_t n = 1 + static_cast<size_t>(trial % 3);
    PolySystem s;
    for (size_t k = 0; k < n; ++k) s.vars.add("x" + std::to_string(k));
    std::vector<std::vector<int>> allowed(n);
    // bounding polynomials prod (x_k - r) put all solutions on a grid
    for (size_t k = 0; k < n; ++k) {
      QPoly b = QPoly::constant(Rational(1));
      std::set<int> rs;
      for (int j = 0; j < 2 + trial % 2; ++j) rs.insert(small(rng));
      for (int r : rs) b *= QPoly::var(k) - QPoly::constant(Rational(r));
      allowed[k].assign(rs.begin(), rs.end());
      s.polys.push_back(b);
    }
    // products of random affine forms
    for (int extra = 0; extra < 2; ++extra) {
      QPoly f = QPoly::constant(Rational(1));
      for (int fac = 0; fac < 2; ++fac) {
        QPoly lin = QPoly::constant(Rational(small(rng)));
        for (size_t k = 0; k < n; ++k) lin += QPoly::var(k).scaled(Rational(small(rng)));
        if (lin.is_zero()) lin = QPoly::var(0);
        f *= lin;
      }
      s.polys.push_back(f);
    }
    std::set<std::vector<Rational>> oracle;
    std::vector<Rational> pt(n);
    std::function<void(size_t)> grid = [&](size_t k) {
      if (k == n) {
        if (vanishes(s.polys, pt)) oracle.insert(pt);
        return;
      }
      for (int r : allowed[k]) {
        pt[k] = Rational(r);
        grid(k + 1);
      }
    };
    grid(0);

    auto branches = factor_split(s.polys);
    for (const auto& p : oracle) {
      bool covered = false;
      for (const auto& b : branches) covered = covered || vanishes(b, p);
      CHECK(covered);
    }
    for (const auto& b : branches) CHECK_FALSE(has_nonzero_constant_for_test(b));

    auto direct = solve_zero_dim(s);
    REQUIRE(direct.status != SolutionSet::Status::Inconclusive);
    CHECK(rational_solutions(direct) == oracle);
    CHECK(direct.solutions.size() == oracle.size());
    auto split = solve_with_splitting(s);
    CHECK(rational_solutions(split) == oracle);
  }
}

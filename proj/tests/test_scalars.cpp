#include <doctest.h>

#include <random>

#include "nilcent/linalg.hpp"
#include "nilcent/upoly.hpp"

using namespace nilcent;

namespace {

Rational random_rational(std::mt19937_64& rng, long long range) {
  std::uniform_int_distribution<long long> num(-range, range), den(1, range);
  return Rational(num(rng), den(rng));
}

QMatrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, long long range, double zero_prob) {
  std::bernoulli_distribution zero(zero_prob);
  QMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (!zero(rng)) m(i, j) = random_rational(rng, range);
  return m;
}

// Laplace expansion: an independent determinant oracle for small sizes.
Rational laplace_det(const QMatrix& a) {
  size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Rational det;
  for (size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    QMatrix minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = a(i, k);
    Rational term = a(0, j) * laplace_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

TEST_CASE("rational arithmetic agrees with GMP") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    Rational a = random_rational(rng, 1000000000000LL), b = random_rational(rng, 1000000000000LL);
    mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
    CHECK((a < b) == (qa < qb));
  }
}

TEST_CASE("rational overflow promotes and demotes") {
  Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
  CHECK_FALSE(big.is_small());
  Rational back = big / Rational(INT64_MAX);
  CHECK(back.is_small());
  CHECK(back == Rational(INT64_MAX));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational(-3, 2).str() == "-3/2");
}

TEST_CASE("cyclotomic identities") {
  for (int n : {3, 4, 5, 6, 8, 12}) {
    Cyclotomic z = Cyclotomic::root_of_unity(n);
    Cyclotomic p = 1;
    Cyclotomic s = 0;
    for (int k = 0; k < n; ++k) {
      s += p;
      p *= z;
    }
    CHECK(p.is_one());
    CHECK(s.is_zero());
    CHECK((z * z.inverse()).is_one());
    CHECK(z.conjugate() == z.inverse());
  }
  Cyclotomic i = Cyclotomic::root_of_unity(4);
  CHECK(i * i == Cyclotomic(-1));
  CHECK((i * i).is_rational());
  Cyclotomic w = Cyclotomic::root_of_unity(3);
  CHECK(w + w * w == Cyclotomic(-1));
  // zeta_3 = zeta_6^2 across conductors
  CHECK(Cyclotomic::root_of_unity(6, 2) == w);
  CHECK(Cyclotomic::root_of_unity(12, 4) == w);
  CHECK(Cyclotomic::root_of_unity(12, 3) == i);
  CHECK(Cyclotomic::parse((Rational(1, 2) + Cyclotomic(Rational(-3, 4)) * w).str()) == Cyclotomic(Rational(1, 2)) + Cyclotomic(Rational(-3, 4)) * w);
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(cyclotomic_bound() + 1), UnsupportedExtension);
}

TEST_CASE("determinant matches Laplace expansion") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    size_t n = 1 + it % 6;
    QMatrix a = random_matrix(rng, n, n, 9, 0.3);
    CHECK(determinant(a) == laplace_det(a));
    CHECK(determinant(a.cast<Cyclotomic>()) == Cyclotomic(laplace_det(a)));
  }
}

TEST_CASE("fraction-free echelon agrees with Gauss-Jordan") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 60; ++it) {
    size_t r = 2 + it % 7, c = 2 + (it * 3) % 8;
    QMatrix a = random_matrix(rng, r, c, 5, 0.5);
    if (it % 3 == 0 && r > 1)
      for (size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * Rational(2) - a(r / 2, j);
    auto q = rref(a);
    auto k = rref(a.cast<Cyclotomic>());
    REQUIRE(q.pivots == k.pivots);
    CHECK(q.m.cast<Cyclotomic>() == k.m);
    auto ker = kernel(a);
    CHECK(ker.size() + q.pivots.size() == c);
    for (const auto& v : ker) CHECK(is_zero_vec(a.apply(v)));
  }
}

TEST_CASE("solve, inverse and coordinates") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 20; ++it) {
    QMatrix a = random_matrix(rng, 5, 5, 7, 0.2);
    auto inv = inverse(a);
    if (determinant(a).is_zero()) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK((a * *inv).is_identity());
    QVec b(5);
    for (auto& x : b) x = random_rational(rng, 9);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
  }
  std::vector<QVec> basis = {{1, 2, 0, 1}, {0, 1, 1, 0}};
  Coordinates<Rational> coords(basis, 4);
  QVec v = scale(Rational(3), basis[0]) - basis[1];
  auto c = coords(v);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(3));
  CHECK((*c)[1] == Rational(-1));
  CHECK_FALSE(coords(QVec{1, 0, 0, 0}).has_value());
}

TEST_CASE("eigenspaces and polynomial roots") {
  // diag(2,2,-1) conjugated by a unimodular matrix
  QMatrix p(3, 3);
  p(0, 0) = 1; p(0, 1) = 1; p(1, 1) = 1; p(1, 2) = 2; p(2, 2) = 1;
  QMatrix d(3, 3);
  d(0, 0) = 2; d(1, 1) = 2; d(2, 2) = -1;
  QMatrix a = p * d * *inverse(p);
  auto es = rational_eigenspaces(a);
  REQUIRE(es.has_value());
  REQUIRE(es->size() == 2);
  CHECK((*es)[0].first == Rational(-1));
  CHECK((*es)[0].second.size() == 1);
  CHECK((*es)[1].second.size() == 2);
  auto cp = charpoly(a);
  // (x-2)^2 (x+1) = x^3 - 3x^2 + 4
  CHECK(cp == std::vector<Rational>{4, 0, -3, 1});
  CHECK(minpoly(a) == std::vector<Rational>{-2, -1, 1});
  QMatrix nil(2, 2);
  nil(0, 1) = 1;
  CHECK_FALSE(rational_eigenspaces(nil + QMatrix::identity(2)).has_value());
  CHECK(rational_roots({Rational(-6), Rational(1), Rational(1)}) == std::vector<Rational>{-3, 2});
  CHECK(rational_roots({Rational(1), Rational(0), Rational(1)}).empty());
  CHECK(rational_roots({Rational(-1), Rational(0), Rational(4)}) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
}

TEST_CASE("lattice basis") {
  auto b = lattice_basis({{2, 4}, {3, 6}, {0, 2}});
  REQUIRE(b.size() == 2);
  // lattice is spanned by (1,2) and (0,2)
  CHECK(b[0] == std::vector<long long>{1, 2});
  CHECK(std::llabs(b[1][1]) == 2);
}

TEST_CASE("rational roots with large coefficients") {
  // roots far beyond trial-division range, plus an irreducible quadratic factor
  std::vector<Rational> expected = {Rational(-7'000'000'011LL, 13), Rational(1'000'000'007LL), Rational(999'999'937LL, 2)};
  UPoly<Rational> p({Rational(2), Rational(0), Rational(1)});
  for (const auto& r : expected) p = p * UPoly<Rational>({-r, Rational(1)});
  std::vector<Rational> got = rational_roots(p.coeffs());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

#include "nilcent/upoly.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <set>
#include <stdexcept>

namespace nilcent {

namespace {

/// Divisors of |n| by trial division, or nullopt when sqrt|n| exceeds `limit`.
std::optional<std::vector<mpz_class>> divisors(mpz_class n, long limit_sqrt) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  mpz_class limit = sqrt(n);
  if (limit > limit_sqrt) return std::nullopt;
  for (mpz_class d = 1; d <= limit; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      mpz_class q = n / d;
      if (q != d) large.push_back(q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

using CLD = std::complex<long double>;

long double to_ld(const mpz_class& z) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(m), static_cast<int>(e));
}

/// Approximate complex roots by Aberth iteration.
std::vector<CLD> aberth_roots(const std::vector<long double>& c) {
  size_t n = c.size() - 1;
  long double rmax = 0;
  for (size_t k = 0; k < n; ++k) rmax = std::max(rmax, std::abs(c[k] / c[n]));
  long double radius = 1 + rmax;
  std::vector<CLD> z(n);
  for (size_t k = 0; k < n; ++k) {
    long double ang = 2 * 3.14159265358979323846L * (static_cast<long double>(k) + 0.25L) / static_cast<long double>(n);
    z[k] = std::polar(radius * 0.5L, ang);
  }
  for (int it = 0; it < 500; ++it) {
    long double change = 0;
    for (size_t k = 0; k < n; ++k) {
      CLD p = c[n], dp = 0;
      for (size_t j = n; j-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[j];
      }
      if (std::abs(p) == 0) continue;
      CLD ratio = p / dp;
      CLD s = 0;
      for (size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      CLD w = ratio / (1.0L - ratio * s);
      z[k] -= w;
      change = std::max(change, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

/// Continued fraction convergents of x with denominators up to `maxden`.
std::vector<Rational> convergents(long double x, long double maxden) {
  std::vector<Rational> out;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double r = x;
  for (int i = 0; i < 40; ++i) {
    long double a = std::floor(r);
    if (std::abs(a) > 1e30L) break;
    mpz_class ai;
    mpz_set_d(ai.get_mpz_t(), static_cast<double>(a));
    mpz_class h = ai * h0 + h1, k = ai * k0 + k1;
    if (to_ld(k) > maxden) break;
    out.emplace_back(mpq_class(h, k));
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    long double frac = r - a;
    if (frac < 1e-18L) break;
    r = 1 / frac;
  }
  return out;
}

}  // namespace

std::vector<Rational> upoly_rational_roots(const UPoly<Rational>& p_in) {
  if (p_in.degree() <= 0) return {};
  UPoly<Rational> p = squarefree_part(p_in);
  std::vector<Rational> roots;
  std::vector<Rational> c = p.coeffs();
  size_t shift = 0;
  while (shift < c.size() && c[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.push_back(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  }
  if (c.size() <= 1) return roots;
  if (c.size() == 2) {
    roots.push_back(-c[0] / c[1]);
  } else {
    mpz_class l = 1;
    for (const auto& x : c) {
      mpz_class d = x.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class a0 = mpq_class(c.front().to_mpq() * l).get_num();
    mpz_class an = mpq_class(c.back().to_mpq() * l).get_num();
    UPoly<Rational> q(c);
    auto nums = divisors(a0, 20000), dens = divisors(an, 20000);
    if (nums && dens) {
      for (const auto& num : *nums)
        for (const auto& den : *dens) {
          if (gcd(num, den) != 1) continue;
          for (int s : {1, -1}) {
            Rational cand(mpq_class(s * num, den));
            if (q.eval(cand).is_zero()) roots.push_back(cand);
          }
        }
    } else {
      // Numeric isolation, then exact confirmation and deflation; repeat until
      // no further rational root is found.
      while (q.degree() >= 1) {
        if (q.degree() == 1) {
          roots.push_back(-q.coeffs()[0] / q.coeffs()[1]);
          break;
        }
        std::vector<long double> cl;
        mpz_class lq = 1;
        for (const auto& x : q.coeffs()) {
          mpz_class d = x.denominator();
          mpz_lcm(lq.get_mpz_t(), lq.get_mpz_t(), d.get_mpz_t());
        }
        // rescale to keep long double in range
        long maxe = 0;
        std::vector<mpz_class> ints;
        for (const auto& x : q.coeffs()) {
          ints.push_back(mpq_class(x.to_mpq() * lq).get_num());
          long e = 0;
          if (ints.back() != 0) mpz_get_d_2exp(&e, ints.back().get_mpz_t());
          maxe = std::max(maxe, e);
        }
        for (const auto& z : ints) {
          long e = 0;
          double m = z == 0 ? 0.0 : mpz_get_d_2exp(&e, z.get_mpz_t());
          cl.push_back(std::ldexp(static_cast<long double>(m), static_cast<int>(e - maxe)));
        }
        long double maxden = std::max(1.0L, std::abs(to_ld(ints.back())));
        bool found = false;
        for (const auto& z : aberth_roots(cl)) {
          if (std::abs(z.imag()) > 1e-6L * (1 + std::abs(z.real()))) continue;
          for (const auto& cand : convergents(z.real(), maxden)) {
            if (q.eval(cand).is_zero()) {
              roots.push_back(cand);
              q = q.divmod(UPoly<Rational>({-cand, Rational(1)})).first;
              found = true;
              break;
            }
          }
          if (q.degree() < 1) break;
        }
        if (!found) break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace nilcent

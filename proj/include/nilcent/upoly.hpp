#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "nilcent/cyclotomic.hpp"
#include "nilcent/rational.hpp"

namespace nilcent {

/// Dense univariate polynomial, constant term first, no trailing zeros.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }
  static UPoly monomial(const F& c, size_t k) {
    std::vector<F> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
  }

  const std::vector<F>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& lead() const { return c_.back(); }
  F coeff(size_t k) const { return k < c_.size() ? c_[k] : F(); }

  F eval(const F& x) const {
    F r;
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / lead();
    std::vector<F> v = c_;
    for (auto& x : v) x = x * inv;
    return UPoly(std::move(v));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<F> v(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * F(static_cast<long long>(k));
    return UPoly(std::move(v));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> r = c_;
    if (degree() < d.degree()) return {UPoly(), *this};
    std::vector<F> q(c_.size() - d.c_.size() + 1);
    F inv = F(1) / d.lead();
    int dd = d.degree();
    for (int k = degree(); k >= dd; --k) {
      if (r[static_cast<size_t>(k)].is_zero()) continue;
      F f = r[static_cast<size_t>(k)] * inv;
      size_t shift = static_cast<size_t>(k - dd);
      q[shift] = f;
      for (size_t j = 0; j < d.c_.size(); ++j)
        if (!d.c_[j].is_zero()) r[shift + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
UPoly<F> upoly_gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
UPoly<F> upoly_lcm(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return UPoly<F>();
  return (a * b).divmod(upoly_gcd(a, b)).first.monic();
}

/// Product of the distinct irreducible factors (monic).
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly<F> g = upoly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

/// Distinct rational roots, sorted ascending.
std::vector<Rational> upoly_rational_roots(const UPoly<Rational>& p);

}  // namespace nilcent

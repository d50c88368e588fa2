#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcent/cyclotomic.hpp"
#include "nilcent/rational.hpp"
#include "nilcent/upoly.hpp"

namespace nilcent {

constexpr size_t kMaxVars = 64;

/// Exponent vector over at most kMaxVars variables.
struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  static Monomial var(size_t i, unsigned k = 1) {
    Monomial m;
    m.e[i] = static_cast<uint8_t>(k);
    m.deg = static_cast<uint16_t>(k);
    return m;
  }
  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = a.e[i] + b.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      m.e[i] = static_cast<uint8_t>(s);
    }
    m.deg = static_cast<uint16_t>(a.deg + b.deg);
    return m;
  }
  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint8_t>(a.e[i] - b.e[i]);
    m.deg = static_cast<uint16_t>(a.deg - b.deg);
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    unsigned d = 0;
    for (size_t i = 0; i < kMaxVars; ++i) {
      m.e[i] = std::max(a.e[i], b.e[i]);
      d += m.e[i];
    }
    m.deg = static_cast<uint16_t>(d);
    return m;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  size_t hash() const;
  /// Largest variable index with nonzero exponent + 1.
  size_t support_end() const;
};

enum class MonoOrder { Lex, DegRevLex };

/// Three-way comparison of monomials: >0 when a > b.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonoOrder ord) {
  if (ord == MonoOrder::Lex) {
    int c = std::memcmp(a.e.data(), b.e.data(), kMaxVars);
    return c;
  }
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (size_t i = kMaxVars; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

/// Names of the indeterminates of a polynomial ring.
class VarRegistry {
 public:
  size_t add(const std::string& name);
  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  std::optional<size_t> find(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

/// Sparse multivariate polynomial with terms sorted decreasingly in `order`.
template <class F>
class Poly {
 public:
  using Term = std::pair<Monomial, F>;

  Poly() = default;
  explicit Poly(MonoOrder o) : ord_(o) {}
  Poly(MonoOrder o, std::vector<Term> terms) : ord_(o), t_(std::move(terms)) { normalize(); }

  /// Terms must already be sorted decreasingly, distinct and nonzero.
  static Poly from_sorted(MonoOrder o, std::vector<Term> terms) {
    Poly p(o);
    p.t_ = std::move(terms);
    return p;
  }
  static Poly constant(const F& c, MonoOrder o = MonoOrder::DegRevLex) {
    Poly p(o);
    if (!c.is_zero()) p.t_.emplace_back(Monomial(), c);
    return p;
  }
  static Poly var(size_t i, MonoOrder o = MonoOrder::DegRevLex) {
    Poly p(o);
    p.t_.emplace_back(Monomial::var(i), F(1));
    return p;
  }

  MonoOrder order() const { return ord_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  const Monomial& lm() const { return t_.front().first; }
  const F& lc() const { return t_.front().second; }
  size_t size() const { return t_.size(); }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : t_) d = std::max<unsigned>(d, m.deg);
    return d;
  }

  /// Same polynomial with terms re-sorted for another order.
  Poly with_order(MonoOrder o) const {
    Poly p(o);
    p.t_ = t_;
    p.sort();
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.t_) c = -c;
    return p;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return a.axpy_term(F(1), Monomial(), b); }
  friend Poly operator-(const Poly& a, const Poly& b) { return a.axpy_term(F(-1), Monomial(), b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.ord_);
    for (const auto& [m, c] : b.t_) out = out.axpy_term(c, m, a);
    return out;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const F& s) const {
    if (s.is_zero()) return Poly(ord_);
    Poly p = *this;
    for (auto& [m, c] : p.t_) c = c * s;
    return p;
  }
  Poly mul_term(const F& c, const Monomial& m) const {
    Poly p(ord_);
    if (c.is_zero()) return p;
    p.t_.reserve(t_.size());
    for (const auto& [mm, cc] : t_) p.t_.emplace_back(mm * m, cc * c);
    return p;
  }
  Poly monic() const { return is_zero() ? *this : scaled(F(1) / lc()); }

  /// this + c * m * b, merging sorted term lists.
  Poly axpy_term(const F& c, const Monomial& m, const Poly& b) const {
    Poly out(ord_);
    out.t_.reserve(t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    bool unit = m.is_one();
    while (i < t_.size() || j < b.t_.size()) {
      if (j == b.t_.size()) {
        out.t_.push_back(t_[i++]);
        continue;
      }
      Monomial bm = unit ? b.t_[j].first : b.t_[j].first * m;
      if (i == t_.size()) {
        out.t_.emplace_back(bm, b.t_[j++].second * c);
        continue;
      }
      int cmp = mono_cmp(t_[i].first, bm, ord_);
      if (cmp > 0) {
        out.t_.push_back(t_[i++]);
      } else if (cmp < 0) {
        out.t_.emplace_back(bm, b.t_[j++].second * c);
      } else {
        F s = t_[i].second + b.t_[j].second * c;
        if (!s.is_zero()) out.t_.emplace_back(bm, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Bitmask of variables that occur.
  uint64_t support() const {
    uint64_t s = 0;
    for (const auto& [m, c] : t_)
      for (size_t i = 0; i < kMaxVars; ++i)
        if (m.e[i]) s |= uint64_t(1) << i;
    return s;
  }
  unsigned degree_in(size_t v) const {
    unsigned d = 0;
    for (const auto& [m, c] : t_) d = std::max<unsigned>(d, m.e[v]);
    return d;
  }

  /// Substitutes x_v = val.
  Poly substitute(size_t v, const F& val) const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& [m, c] : t_) {
      F cc = c;
      for (unsigned k = 0; k < m.e[v]; ++k) cc = cc * val;
      Monomial mm = m;
      mm.deg = static_cast<uint16_t>(mm.deg - mm.e[v]);
      mm.e[v] = 0;
      out.emplace_back(mm, cc);
    }
    return Poly(ord_, std::move(out));
  }
  /// Full evaluation; `point` must cover every occurring variable.
  F eval(const std::vector<F>& point) const {
    F s;
    for (const auto& [m, c] : t_) {
      F term = c;
      for (size_t i = 0; i < kMaxVars; ++i)
        for (unsigned k = 0; k < m.e[i]; ++k) term = term * point[i];
      s += term;
    }
    return s;
  }
  /// Univariate view when only x_v occurs.
  std::optional<UPoly<F>> as_univariate(size_t v) const {
    if (support() & ~(uint64_t(1) << v)) return std::nullopt;
    std::vector<F> c(degree_in(v) + 1);
    for (const auto& [m, cc] : t_) c[m.e[v]] += cc;
    return UPoly<F>(std::move(c));
  }
  static Poly from_univariate(const UPoly<F>& u, size_t v, MonoOrder o) {
    std::vector<Term> out;
    for (size_t k = 0; k < u.coeffs().size(); ++k)
      if (!u.coeffs()[k].is_zero()) out.emplace_back(Monomial::var(v, static_cast<unsigned>(k)), u.coeffs()[k]);
    return Poly(o, std::move(out));
  }

  std::string str(const VarRegistry* vars = nullptr) const;

 private:
  void sort() {
    MonoOrder o = ord_;
    std::sort(t_.begin(), t_.end(), [o](const Term& a, const Term& b) { return mono_cmp(a.first, b.first, o) > 0; });
  }
  void normalize() {
    sort();
    std::vector<Term> out;
    for (auto& t : t_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
    t_ = std::move(out);
  }

  MonoOrder ord_ = MonoOrder::DegRevLex;
  std::vector<Term> t_;
};

using QPoly = Poly<Rational>;
using KPoly = Poly<Cyclotomic>;

KPoly to_k(const QPoly& p);
/// Rational copy when every coefficient is rational.
std::optional<QPoly> to_q(const KPoly& p);

/// Parses e.g. "2*x^2*y - 1/3*z + z4*y" with variables looked up (or added) in `vars`.
KPoly parse_poly(const std::string& text, VarRegistry& vars, MonoOrder o = MonoOrder::DegRevLex);

}  // namespace nilcent

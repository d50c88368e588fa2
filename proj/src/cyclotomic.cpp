#include "nilcent/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

namespace nilcent {

namespace {

int g_bound = 24;

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

using IntPoly = std::vector<long long>;

IntPoly compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPoly& q = cyclotomic_polynomial(d);
    int dq = static_cast<int>(q.size()) - 1;
    int dp = static_cast<int>(p.size()) - 1;
    IntPoly quo(dp - dq + 1, 0);
    for (int k = dp; k >= dq; --k) {
      long long c = p[k];
      quo[k - dq] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
    }
    p = quo;
  }
  return p;
}

/// x^j mod Phi_m for 0 <= j < m.
const std::vector<std::vector<long long>>& power_table(int m) {
  static std::map<int, std::vector<std::vector<long long>>> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  const IntPoly& phi = cyclotomic_polynomial(m);
  int deg = static_cast<int>(phi.size()) - 1;
  std::vector<std::vector<long long>> tab;
  std::vector<long long> cur(deg, 0);
  cur[0] = 1;
  for (int j = 0; j < m; ++j) {
    tab.push_back(cur);
    // multiply by x
    long long top = cur[deg - 1];
    for (int k = deg - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    for (int k = 0; k < deg; ++k) cur[k] -= top * phi[k];
  }
  std::lock_guard<std::mutex> lock(table_mutex());
  return cache.emplace(m, std::move(tab)).first->second;
}

}  // namespace

int cyclotomic_bound() { return g_bound; }
void set_cyclotomic_bound(int n) { g_bound = n; }

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly p = n == 1 ? IntPoly{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(table_mutex());
  return cache.emplace(n, std::move(p)).first->second;
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

Cyclotomic::Cyclotomic(int n, std::vector<Rational> coeffs) : n_(n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  if (n > g_bound) throw UnsupportedExtension("root of unity of order " + std::to_string(n) + " exceeds bound");
  int phi = euler_phi(n);
  if (static_cast<int>(coeffs.size()) > phi) {
    // reduce x^j for j >= phi through the power table
    const auto& tab = power_table(n);
    std::vector<Rational> red(phi);
    for (size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j].is_zero()) continue;
      const auto& row = tab[j % n];
      for (int k = 0; k < phi; ++k)
        if (row[k] != 0) red[k] += coeffs[j] * Rational(row[k]);
    }
    coeffs = std::move(red);
  }
  coeffs.resize(phi);
  c0_ = coeffs[0];
  rest_.assign(coeffs.begin() + 1, coeffs.end());
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(int n, int k) {
  if (n > g_bound) throw UnsupportedExtension("root of unity of order " + std::to_string(n) + " exceeds bound");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  return Cyclotomic(n, std::move(c));
}

void Cyclotomic::normalize() {
  for (const auto& r : rest_)
    if (!r.is_zero()) return;
  n_ = 1;
  rest_.clear();
}

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> v;
  v.reserve(rest_.size() + 1);
  v.push_back(c0_);
  v.insert(v.end(), rest_.begin(), rest_.end());
  return v;
}

const Rational& Cyclotomic::rational() const {
  if (n_ != 1) throw std::domain_error("cyclotomic element is not rational");
  return c0_;
}

Cyclotomic Cyclotomic::lift(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
  if (n_ == 1) {
    Cyclotomic r(*this);
    return r;
  }
  int step = m / n_;
  std::vector<Rational> c(static_cast<size_t>(m));
  for (int k = 0; k < degree(); ++k) c[static_cast<size_t>(k * step)] = coeff(k);
  Cyclotomic r(m, std::move(c));
  return r;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (n_ == 1) return *this;
  std::vector<Rational> c(static_cast<size_t>(n_));
  for (int k = 0; k < degree(); ++k) c[static_cast<size_t>((n_ - k) % n_)] += coeff(k);
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  r.c0_ = -r.c0_;
  for (auto& x : r.rest_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1 && b.n_ == 1) return Cyclotomic(a.c0_ + b.c0_);
  if (a.n_ == b.n_ || b.n_ == 1 || a.n_ == 1) {
    Cyclotomic r = a.n_ >= b.n_ ? a : b;
    const Cyclotomic& o = a.n_ >= b.n_ ? b : a;
    r.c0_ += o.c0_;
    for (size_t k = 0; k < o.rest_.size(); ++k) r.rest_[k] += o.rest_[k];
    r.normalize();
    return r;
  }
  int m = std::lcm(a.n_, b.n_);
  return a.lift(m) + b.lift(m);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1 && b.n_ == 1) return Cyclotomic(a.c0_ * b.c0_);
  if (a.n_ == 1 || b.n_ == 1) {
    Cyclotomic r = a.n_ == 1 ? b : a;
    const Rational& s = a.n_ == 1 ? a.c0_ : b.c0_;
    if (s.is_zero()) return Cyclotomic();
    r.c0_ *= s;
    for (auto& x : r.rest_) x *= s;
    return r;
  }
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.lift(m) * b.lift(m);
  }
  int n = a.n_;
  int da = a.degree();
  std::vector<Rational> prod(static_cast<size_t>(2 * da - 1));
  for (int i = 0; i < da; ++i) {
    const Rational& ai = a.coeff(i);
    if (ai.is_zero()) continue;
    for (int j = 0; j < da; ++j) {
      const Rational& bj = b.coeff(j);
      if (bj.is_zero()) continue;
      prod[static_cast<size_t>(i + j)] += ai * bj;
    }
  }
  const auto& phi = cyclotomic_polynomial(n);
  for (int k = 2 * da - 2; k >= da; --k) {
    Rational c = prod[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    for (int j = 0; j <= da; ++j)
      if (phi[static_cast<size_t>(j)] != 0) prod[static_cast<size_t>(k - da + j)] -= c * Rational(phi[static_cast<size_t>(j)]);
  }
  prod.resize(static_cast<size_t>(da));
  return Cyclotomic(n, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (n_ == 1) return Cyclotomic(c0_.inverse());
  // Solve (a * x) = 1 using the multiplication matrix.
  int d = degree();
  std::vector<std::vector<Rational>> m(static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d + 1)));
  for (int j = 0; j < d; ++j) {
    Cyclotomic col = *this * root_of_unity(n_, j);
    std::vector<Rational> cs = col.n_ == 1 ? std::vector<Rational>{col.c0_} : col.lift(n_).coeffs();
    cs.resize(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = cs[static_cast<size_t>(i)];
  }
  m[0][static_cast<size_t>(d)] = 1;
  for (int c = 0; c < d; ++c) {
    int p = c;
    while (m[static_cast<size_t>(p)][static_cast<size_t>(c)].is_zero()) ++p;
    std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(c)]);
    Rational inv = m[static_cast<size_t>(c)][static_cast<size_t>(c)].inverse();
    for (auto& x : m[static_cast<size_t>(c)]) x *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) continue;
      Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      for (int k = c; k <= d; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * m[static_cast<size_t>(c)][static_cast<size_t>(k)];
    }
  }
  std::vector<Rational> x(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) x[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(d)];
  return Cyclotomic(n_, std::move(x));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.n_ == 1) {
    if (a.n_ == 1) return Cyclotomic(a.c0_ / b.c0_);
    return a * Cyclotomic(b.c0_.inverse());
  }
  return a * b.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c0_ == b.c0_ && a.rest_ == b.rest_;
  int m = std::lcm(a.n_, b.n_);
  Cyclotomic x = a.lift(m), y = b.lift(m);
  if (x.n_ != y.n_) return false;
  return x.c0_ == y.c0_ && x.rest_ == y.rest_;
}

std::string Cyclotomic::str() const {
  if (n_ == 1) return c0_.str();
  std::string out;
  for (int k = 0; k < degree(); ++k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = c.str();
    } else {
      std::string z = "z" + std::to_string(n_) + (k > 1 ? "^" + std::to_string(k) : "");
      if (c.is_one())
        term = z;
      else if ((-c).is_one())
        term = "-" + z;
      else
        term = c.str() + "*" + z;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == ' ') continue;
    if ((ch == '+' || ch == '-') && !cur.empty() && cur.back() != '^' && cur.back() != '*') {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  if (!cur.empty()) terms.push_back(cur);
  if (terms.empty()) throw std::invalid_argument("empty cyclotomic");
  Cyclotomic total;
  for (auto t : terms) {
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    size_t zpos = t.find('z');
    if (zpos == std::string::npos) {
      total += Cyclotomic(Rational::parse(t));
      continue;
    }
    std::string coeff = t.substr(0, zpos);
    std::string zpart = t.substr(zpos + 1);
    Rational c = 1;
    if (coeff == "-")
      c = -1;
    else if (!coeff.empty()) {
      if (coeff.back() != '*') throw std::invalid_argument("bad cyclotomic term: " + t);
      c = Rational::parse(coeff.substr(0, coeff.size() - 1));
    }
    size_t caret = zpart.find('^');
    int n = std::stoi(zpart.substr(0, caret));
    int k = caret == std::string::npos ? 1 : std::stoi(zpart.substr(caret + 1));
    total += Cyclotomic(c) * root_of_unity(n, k);
  }
  return total;
}

size_t Cyclotomic::hash() const {
  size_t h = std::hash<int>()(n_);
  h = h * 1000003u ^ c0_.hash();
  for (const auto& r : rest_) h = h * 1000003u ^ r.hash();
  return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

}  // namespace nilcent

#include "nilcent/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "nilcent/upoly.hpp"

namespace nilcent {

std::optional<QVec> to_q(const KVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_rational()) return std::nullopt;
    out[i] = v[i].rational();
  }
  return out;
}

std::optional<QMatrix> to_q(const KMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return std::nullopt;
      out(i, j) = m(i, j).rational();
    }
  return out;
}

namespace {

/// Multiplies every row by the lcm of its denominators.
void integerize_rows(QMatrix& a) {
  for (size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (x.is_zero() || x.is_integer()) continue;
      mpz_class d = x.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (l == 1) continue;
    Rational s{mpq_class(l)};
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) a(i, j) *= s;
  }
}

}  // namespace

template <>
RowEchelon<Rational> rref(QMatrix a) {
  size_t rows = a.rows(), cols = a.cols();
  integerize_rows(a);
  // fraction-free forward elimination
  std::vector<size_t> piv;
  Rational prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational pv = a(r, c);
    for (size_t i = r + 1; i < rows; ++i) {
      const Rational f = a(i, c);
      for (size_t j = c + 1; j < cols; ++j) {
        const Rational& arj = a(r, j);
        Rational& aij = a(i, j);
        if (f.is_zero() || arj.is_zero()) {
          if (!aij.is_zero()) aij = pv * aij / prev;
        } else {
          aij = (pv * aij - f * arj) / prev;
        }
      }
      a(i, c) = Rational();
    }
    prev = pv;
    piv.push_back(c);
    ++r;
  }
  // back substitution to reduced form
  for (size_t k = r; k-- > 0;) {
    size_t c = piv[k];
    Rational inv = a(k, c).inverse();
    for (size_t j = c; j < cols; ++j)
      if (!a(k, j).is_zero()) a(k, j) *= inv;
    for (size_t i = 0; i < k; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (size_t j = c; j < cols; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
    }
  }
  QMatrix out(r, cols);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return {std::move(out), std::move(piv)};
}

template <>
Rational determinant(QMatrix a) {
  size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss: the last pivot is the determinant of the integerised matrix.
  Rational scale = 1;
  for (size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < n; ++j) {
      const Rational& x = a(i, j);
      if (x.is_zero() || x.is_integer()) continue;
      mpz_class d = x.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (l == 1) continue;
    Rational s{mpq_class(l)};
    scale *= s;
    for (size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) a(i, j) *= s;
  }
  Rational prev = 1;
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      sign = -sign;
    }
    for (size_t i = c + 1; i < n; ++i) {
      for (size_t j = c + 1; j < n; ++j) a(i, j) = (a(c, c) * a(i, j) - a(i, c) * a(c, j)) / prev;
      a(i, c) = Rational();
    }
    prev = a(c, c);
  }
  Rational det = a(n - 1, n - 1) / scale;
  return sign < 0 ? -det : det;
}

std::vector<Rational> charpoly(const QMatrix& a) {
  size_t n = a.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  for (size_t k = 1; k <= n; ++k) {
    QMatrix next = a * m;
    for (size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    QMatrix am = a * m;
    Rational tr;
    for (size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long long>(k));
  }
  return c;
}

namespace {

/// Minimal polynomial of v under A (monic, constant term first).
UPoly<Rational> krylov_minpoly(const QMatrix& a, const QVec& v) {
  size_t n = a.rows();
  std::vector<QVec> seq{v};
  while (true) {
    QVec next = a.apply(seq.back());
    // Is next in the span of seq?
    QMatrix m = QMatrix::from_columns(seq, n);
    auto sol = solve(m, next);
    if (sol) {
      std::vector<Rational> p(seq.size() + 1);
      for (size_t i = 0; i < seq.size(); ++i) p[i] = -(*sol)[i];
      p[seq.size()] = 1;
      return UPoly<Rational>(std::move(p));
    }
    seq.push_back(std::move(next));
    if (seq.size() > n + 1) throw std::logic_error("krylov sequence did not terminate");
  }
}

}  // namespace

std::vector<Rational> minpoly(const QMatrix& a) {
  size_t n = a.rows();
  UPoly<Rational> p({Rational(1)});
  for (size_t j = 0; j < n; ++j) {
    QVec e = unit_vec<Rational>(n, j);
    // skip vectors already killed by p(A)
    QVec w(n);
    QVec pw = e;
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
      axpy(w, p.coeffs()[k], pw);
      pw = a.apply(pw);
    }
    if (is_zero_vec(w)) continue;
    p = upoly_lcm(p, krylov_minpoly(a, e));
  }
  return p.coeffs();
}

std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
  return upoly_rational_roots(UPoly<Rational>(poly));
}

std::optional<std::vector<std::pair<Rational, std::vector<QVec>>>> rational_eigenspaces(const QMatrix& a) {
  size_t n = a.rows();
  // A Krylov vector in general position usually already has the full minimal polynomial.
  QVec v(n);
  for (size_t i = 0; i < n; ++i) v[i] = Rational(static_cast<long long>((i * 7919 + 17) % 101) - 50);
  std::vector<Rational> roots = n == 0 ? std::vector<Rational>{} : upoly_rational_roots(krylov_minpoly(a, v));
  std::vector<std::pair<Rational, std::vector<QVec>>> out;
  size_t total = 0;
  auto collect = [&](const std::vector<Rational>& rs) {
    out.clear();
    total = 0;
    for (const auto& r : rs) {
      QMatrix b = a;
      for (size_t i = 0; i < n; ++i) b(i, i) -= r;
      auto k = kernel(b);
      total += k.size();
      out.emplace_back(r, std::move(k));
    }
  };
  collect(roots);
  if (total != n) collect(rational_roots(minpoly(a)));
  if (total != n) return std::nullopt;
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<std::vector<long long>> lattice_basis(const std::vector<std::vector<long long>>& rows_in) {
  if (rows_in.empty()) return {};
  size_t n = rows_in[0].size();
  std::vector<std::vector<long long>> rows = rows_in;
  std::vector<std::vector<long long>> out;
  size_t start = 0;
  for (size_t c = 0; c < n; ++c) {
    // Euclid on column c among rows[start..]
    while (true) {
      size_t best = rows.size();
      for (size_t i = start; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[start], rows[best]);
      bool done = true;
      for (size_t i = start + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        long long q = rows[i][c] / rows[start][c];
        for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[start][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        if (rows[start][c] < 0)
          for (auto& x : rows[start]) x = -x;
        out.push_back(rows[start]);
        ++start;
        break;
      }
    }
  }
  return out;
}

}  // namespace nilcent

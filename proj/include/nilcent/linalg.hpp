#pragma once

#include <optional>
#include <vector>

#include "nilcent/matrix.hpp"

namespace nilcent {

template <class F>
struct RowEchelon {
  Matrix<F> m;                 // reduced row echelon form, zero rows dropped
  std::vector<size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination. The Rational overload goes through a
/// fraction-free Bareiss pass on row-integerised data.
template <class F>
RowEchelon<F> rref(Matrix<F> a) {
  size_t rows = a.rows(), cols = a.cols();
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    F inv = F(1) / a(r, c);
    for (size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      F f = a(i, c);
      for (size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  Matrix<F> out(r, cols);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return {std::move(out), std::move(piv)};
}

template <>
RowEchelon<Rational> rref(Matrix<Rational> a);

template <class F>
size_t rank(const Matrix<F>& a) {
  return rref(a).pivots.size();
}

/// Basis of the right null space {x : A x = 0}.
template <class F>
std::vector<Vec<F>> kernel(const Matrix<F>& a) {
  auto e = rref(a);
  size_t n = a.cols();
  std::vector<bool> is_piv(n, false);
  for (size_t p : e.pivots) is_piv[p] = true;
  std::vector<Vec<F>> basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec<F> v(n);
    v[f] = F(1);
    for (size_t i = 0; i < e.pivots.size(); ++i)
      if (!e.m(i, f).is_zero()) v[e.pivots[i]] = -e.m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of A x = b, or nullopt.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(std::move(aug));
  Vec<F> x(a.cols());
  for (size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.m(i, a.cols());
  }
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  size_t n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Matrix<F> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

template <class F>
F determinant(Matrix<F> a) {
  size_t n = a.rows();
  F det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    F inv = F(1) / a(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      F f = a(i, c) * inv;
      for (size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

template <>
Rational determinant(Matrix<Rational> a);

/// Basis (as rows of a reduced echelon matrix) of the span of the given vectors.
template <class F>
std::vector<Vec<F>> span_basis(const std::vector<Vec<F>>& vs, size_t n) {
  if (vs.empty()) return {};
  auto e = rref(Matrix<F>::from_rows(vs, n));
  std::vector<Vec<F>> out;
  for (size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.m.row(i));
  return out;
}

/// Intersection of two subspaces given by spanning sets.
template <class F>
std::vector<Vec<F>> intersect(const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b, size_t n) {
  if (a.empty() || b.empty()) return {};
  // x = sum a_i s_i = sum b_j t_j
  Matrix<F> m(n, a.size() + b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < n; ++k) m(k, i) = a[i][k];
  for (size_t j = 0; j < b.size(); ++j)
    for (size_t k = 0; k < n; ++k) m(k, a.size() + j) = -b[j][k];
  std::vector<Vec<F>> out;
  for (const auto& z : kernel(m)) {
    Vec<F> v(n);
    for (size_t i = 0; i < a.size(); ++i) axpy(v, z[i], a[i]);
    if (!is_zero_vec(v)) out.push_back(std::move(v));
  }
  return span_basis(out, n);
}

/// Solves for coordinates in a fixed basis repeatedly.
template <class F>
class Coordinates {
 public:
  Coordinates() = default;
  Coordinates(const std::vector<Vec<F>>& basis, size_t n) : n_(n), k_(basis.size()) {
    // rref of [B^T | I] gives a left inverse on the pivot rows.
    Matrix<F> aug(n, k_ + n);
    for (size_t j = 0; j < k_; ++j)
      for (size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    for (size_t i = 0; i < n; ++i) aug(i, k_ + i) = F(1);
    auto e = rref(std::move(aug));
    for (size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.pivots[i] < k_) {
        if (e.pivots[i] != i) throw std::invalid_argument("coordinate basis is not independent");
        left_.push_back(strip(e.m.row(i)));
      } else {
        check_.push_back(strip(e.m.row(i)));
      }
    }
    if (left_.size() != k_) throw std::invalid_argument("coordinate basis is not independent");
  }

  size_t size() const { return k_; }

  /// Coordinates of v in the basis, or nullopt if v is outside the span.
  std::optional<Vec<F>> operator()(const Vec<F>& v) const {
    for (const auto& c : check_)
      if (!dot(c, v).is_zero()) return std::nullopt;
    Vec<F> x(k_);
    for (size_t i = 0; i < k_; ++i) x[i] = dot(left_[i], v);
    return x;
  }

 private:
  Vec<F> strip(const Vec<F>& row) const { return Vec<F>(row.begin() + static_cast<long>(k_), row.end()); }
  size_t n_ = 0, k_ = 0;
  std::vector<Vec<F>> left_, check_;
};

/// Common null space of several matrices, computed incrementally.
template <class F>
std::vector<Vec<F>> common_kernel(const std::vector<Matrix<F>>& ms, size_t n) {
  std::vector<Vec<F>> basis;
  for (size_t i = 0; i < n; ++i) basis.push_back(unit_vec<F>(n, i));
  for (const auto& m : ms) {
    if (basis.empty()) break;
    Matrix<F> img(m.rows(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) img.set_col(j, m.apply(basis[j]));
    std::vector<Vec<F>> nb;
    for (const auto& z : kernel(img)) {
      Vec<F> v(n);
      for (size_t j = 0; j < basis.size(); ++j) axpy(v, z[j], basis[j]);
      nb.push_back(std::move(v));
    }
    basis = span_basis(nb, n);
  }
  return basis;
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence;
/// coefficients constant term first, monic.
std::vector<Rational> charpoly(const QMatrix& a);

/// Minimal polynomial of A, constant term first, monic.
std::vector<Rational> minpoly(const QMatrix& a);

/// Distinct rational roots of an integer-or-rational polynomial.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

/// Eigenvalues with eigenspaces for a matrix diagonalisable over Q; nullopt otherwise.
std::optional<std::vector<std::pair<Rational, std::vector<QVec>>>> rational_eigenspaces(const QMatrix& a);

/// Hermite-style integer basis of the lattice spanned by the rows (integers only).
std::vector<std::vector<long long>> lattice_basis(const std::vector<std::vector<long long>>& rows);

}  // namespace nilcent

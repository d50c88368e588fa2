#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcent/cyclotomic.hpp"
#include "nilcent/rational.hpp"

namespace nilcent {

template <class F>
using Vec = std::vector<F>;

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t r, size_t c) : r_(r), c_(c), d_(r * c) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec<F>>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<F>>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  F& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
  const F& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

  Vec<F> row(size_t i) const { return Vec<F>(d_.begin() + static_cast<long>(i * c_), d_.begin() + static_cast<long>((i + 1) * c_)); }
  Vec<F> col(size_t j) const {
    Vec<F> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(size_t j, const Vec<F>& v) {
    for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<F> apply(const Vec<F>& v) const {
    Vec<F> out(r_);
    for (size_t j = 0; j < c_; ++j) {
      if (v[j].is_zero()) continue;
      for (size_t i = 0; i < r_; ++i) {
        const F& a = (*this)(i, j);
        if (!a.is_zero()) out[i] += a * v[j];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < b.c_; ++j) {
          const F& y = b(k, j);
          if (!y.is_zero()) m(i, j) += x * y;
        }
      }
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (size_t i = 0; i < m.d_.size(); ++i) m.d_[i] += b.d_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (size_t i = 0; i < m.d_.size(); ++i) m.d_[i] -= b.d_[i];
    return m;
  }
  friend Matrix operator*(const F& s, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.d_)
      if (!x.is_zero()) x = s * x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) {
        const F& x = (*this)(i, j);
        if (i == j ? !x.is_one() : !x.is_zero()) return false;
      }
    return true;
  }

  template <class G>
  Matrix<G> cast() const {
    Matrix<G> m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = G((*this)(i, j));
    return m;
  }

  const std::vector<F>& data() const { return d_; }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<F> d_;
};

using QMatrix = Matrix<Rational>;
using KMatrix = Matrix<Cyclotomic>;
using QVec = Vec<Rational>;
using KVec = Vec<Cyclotomic>;

template <class F>
Vec<F> operator+(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
template <class F>
Vec<F> operator-(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
template <class F>
Vec<F> scale(const F& s, const Vec<F>& a) {
  Vec<F> r(a.size());
  if (s.is_zero()) return r;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = s * a[i];
  return r;
}
template <class F>
void axpy(Vec<F>& y, const F& a, const Vec<F>& x) {
  if (a.is_zero()) return;
  for (size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}
template <class F>
bool is_zero_vec(const Vec<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}
template <class F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  F s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}
template <class F>
Vec<F> unit_vec(size_t n, size_t i) {
  Vec<F> v(n);
  v[i] = F(1);
  return v;
}
inline KVec to_k(const QVec& v) { return KVec(v.begin(), v.end()); }
/// Returns nullopt when some entry is not rational.
std::optional<QVec> to_q(const KVec& v);
std::optional<QMatrix> to_q(const KMatrix& m);

}  // namespace nilcent

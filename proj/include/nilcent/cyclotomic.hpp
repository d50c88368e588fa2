#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nilcent/rational.hpp"

namespace nilcent {

/// Thrown when a computation would need a root of unity past the configured bound.
class UnsupportedExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest conductor n for which zeta_n may be adjoined.
int cyclotomic_bound();
void set_cyclotomic_bound(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Element of Q(zeta_n), stored in the power basis 1, z, ..., z^(phi(n)-1).
/// Elements that lie in Q are normalised to conductor 1.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& r) : c0_(r) {}  // NOLINT
  Cyclotomic(long long v) : c0_(v) {}        // NOLINT
  Cyclotomic(int v) : c0_(v) {}              // NOLINT
  Cyclotomic(int n, std::vector<Rational> coeffs);

  /// zeta_n^k.
  static Cyclotomic root_of_unity(int n, int k = 1);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(rest_.size()) + 1; }
  const Rational& coeff(int k) const { return k == 0 ? c0_ : rest_[k - 1]; }
  std::vector<Rational> coeffs() const;

  bool is_zero() const { return n_ == 1 && c0_.is_zero(); }
  bool is_one() const { return n_ == 1 && c0_.is_one(); }
  bool is_rational() const { return n_ == 1; }
  const Rational& rational() const;

  /// Same element expressed over Q(zeta_m); requires n | m.
  Cyclotomic lift(int m) const;
  /// Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conjugate() const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Textual form, e.g. "1/2", "-1/2+1/2*z4", "z3^2".
  std::string str() const;
  static Cyclotomic parse(const std::string& s);
  size_t hash() const;

 private:
  void normalize();

  int n_ = 1;
  Rational c0_;
  std::vector<Rational> rest_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace nilcent

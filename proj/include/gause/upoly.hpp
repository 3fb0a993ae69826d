#pragma once

#include <span>
#include <string>
#include <vector>

#include "gause/scalar.hpp"

namespace gause {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial in x over Q(i). Index = power of x; trailing
/// zeros are always trimmed.
class UPoly {
 public:
  UPoly() = default;
  UPoly(QGauss constant);  // NOLINT(google-explicit-constructor)
  UPoly(long constant) : UPoly(QGauss(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<QGauss> coeffs);

  static UPoly monomial(const QGauss& coeff, int power);
  static UPoly x() { return monomial(QGauss(1), 1); }
  /// Monic linear factor x - root.
  static UPoly linear(const QGauss& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^power; zero outside the stored range.
  const QGauss& coeff(int power) const;
  const QGauss& leading() const { return coeff(degree()); }
  std::span<const QGauss> coeffs() const { return c_; }

  UPoly derivative() const;
  UPoly monic() const;
  /// Multiplies by x^shift.
  UPoly shifted(int shift) const;

  QGauss operator()(const QGauss& x) const;
  CScalar operator()(const CScalar& x) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const QGauss& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const QGauss& s) { return a *= s; }
  friend UPoly operator*(const QGauss& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<QGauss> c_;
};

UPoly pow(const UPoly& base, int exponent);

struct DivRem {
  UPoly quotient;
  UPoly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b == 0.
DivRem poly_divrem(const UPoly& a, const UPoly& b);

/// Monic gcd (zero when both inputs are zero).
UPoly poly_gcd(UPoly a, UPoly b);

/// True when b divides a exactly; the quotient is written to *quotient.
bool divides(const UPoly& b, const UPoly& a, UPoly* quotient = nullptr);

}  // namespace gause

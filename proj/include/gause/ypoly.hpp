#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gause/upoly.hpp"

namespace gause {

/// Bivariate polynomial stored by powers of y: sum_j X_j(x) y^j.
class YPoly {
 public:
  YPoly() = default;
  YPoly(UPoly constant_stratum);  // NOLINT(google-explicit-constructor)
  explicit YPoly(std::vector<UPoly> strata);

  static YPoly x() { return YPoly(UPoly::x()); }
  static YPoly y() { return YPoly(std::vector<UPoly>{UPoly(), UPoly(1)}); }
  /// coeff * x^px * y^py
  static YPoly monomial(const QGauss& coeff, int px, int py);

  int deg_y() const { return static_cast<int>(s_.size()) - 1; }
  int total_degree() const;
  bool is_zero() const { return s_.empty(); }
  bool is_constant() const { return s_.size() <= 1 && stratum(0).is_constant(); }

  /// X_j; zero outside the stored range.
  const UPoly& stratum(int j) const;
  const std::vector<UPoly>& strata() const { return s_; }
  /// Smallest j with X_j != 0 (-1 for the zero polynomial).
  int lowest_stratum() const;

  YPoly dx() const;
  YPoly dy() const;
  /// Multiplies by y^shift.
  YPoly shifted(int shift) const;

  QGauss operator()(const QGauss& x, const QGauss& y) const;
  CScalar operator()(const CScalar& x, const CScalar& y) const;

  YPoly operator-() const;
  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  YPoly& operator*=(const UPoly& s);
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(YPoly a, const UPoly& s) { return a *= s; }
  friend YPoly operator*(const UPoly& s, YPoly a) { return a *= s; }
  friend YPoly operator*(YPoly a, const QGauss& s) { return a *= UPoly(s); }
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  friend bool operator==(const YPoly& a, const YPoly& b) { return a.s_ == b.s_; }
  friend bool operator!=(const YPoly& a, const YPoly& b) { return !(a == b); }

  /// Coefficient of the highest y-stratum's leading x power.
  const QGauss& leading() const;
  /// Scales so that leading() == 1.
  YPoly normalized() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<UPoly> s_;
};

YPoly pow(const YPoly& base, int exponent);

/// a / b when b divides a in Q(i)[x, y]; std::nullopt otherwise.
/// Throws std::domain_error when b == 0.
std::optional<YPoly> divide_exact(const YPoly& a, const YPoly& b);

/// Gcd in Q(i)[x, y], normalized (leading() == 1); zero iff both are zero.
YPoly gcd(const YPoly& a, const YPoly& b);

}  // namespace gause

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gause {

using Rational = mpq_class;
using CScalar = std::complex<double>;

/// Canonical "p/q" form ("p" when q == 1).
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on anything else
/// (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Element of Q(i), the Gaussian rationals. Both parts are kept canonical by
/// GMP, so structural equality is numeric equality.
class QGauss {
 public:
  QGauss() = default;
  QGauss(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  QGauss(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  QGauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static QGauss i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  QGauss conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  QGauss operator-() const { return {-re_, -im_}; }
  QGauss& operator+=(const QGauss& o);
  QGauss& operator-=(const QGauss& o);
  QGauss& operator*=(const QGauss& o);
  /// Throws std::domain_error on division by zero.
  QGauss& operator/=(const QGauss& o);

  friend QGauss operator+(QGauss a, const QGauss& b) { return a += b; }
  friend QGauss operator-(QGauss a, const QGauss& b) { return a -= b; }
  friend QGauss operator*(QGauss a, const QGauss& b) { return a *= b; }
  friend QGauss operator/(QGauss a, const QGauss& b) { return a /= b; }
  friend bool operator==(const QGauss& a, const QGauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const QGauss& a, const QGauss& b) { return !(a == b); }

  CScalar to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/4", "-1/2i", "1+2i", ...; used for display and canonical keys.
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

QGauss pow(const QGauss& base, int exponent);

/// Exact square root in Q(i), if one exists.
std::optional<QGauss> gauss_sqrt(const QGauss& z);

/// Throws std::domain_error when z has a NaN or infinite component.
const CScalar& require_finite(const CScalar& z, std::string_view what);

}  // namespace gause

#include "gause/scalar.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace gause {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::optional<mpz_class> integer_sqrt(const mpz_class& n) {
  if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\" (expected \"p\" or \"p/q\")");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (sgn(d) == 0)
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\" (zero denominator)");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  auto n = integer_sqrt(q.get_num());
  auto d = integer_sqrt(q.get_den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

QGauss& QGauss::operator+=(const QGauss& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QGauss& QGauss::operator-=(const QGauss& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QGauss& QGauss::operator*=(const QGauss& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

QGauss& QGauss::operator/=(const QGauss& o) {
  if (o.is_zero()) throw std::domain_error("QGauss: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string QGauss::to_string() const {
  if (is_real()) return gause::to_string(re_);
  std::string imag = (im_ == 1) ? "" : (im_ == -1) ? "-" : gause::to_string(im_);
  if (sgn(re_) == 0) return imag + "i";
  std::string out = gause::to_string(re_);
  if (sgn(im_) > 0) out += "+";
  return out + imag + "i";
}

QGauss pow(const QGauss& base, int exponent) {
  if (exponent < 0) return pow(QGauss(1) / base, -exponent);
  QGauss result(1);
  QGauss b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<QGauss> gauss_sqrt(const QGauss& z) {
  // (u + iv)^2 = a + ib  =>  u^2 = (|z| + a)/2, v^2 = (|z| - a)/2, 2uv = b.
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto u = rational_sqrt((*modulus + z.re()) / 2);
  auto v = rational_sqrt((*modulus - z.re()) / 2);
  if (!u || !v) return std::nullopt;
  Rational vv = (sgn(z.im()) < 0) ? Rational(-*v) : *v;
  QGauss root(*u, vv);
  if (root * root != z) return std::nullopt;
  return root;
}

const CScalar& require_finite(const CScalar& z, std::string_view what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("non-finite value in " + std::string(what));
  return z;
}

}  // namespace gause

#include "gause/upoly.hpp"

#include <stdexcept>

namespace gause {

namespace {
const QGauss kZero{};
}

UPoly::UPoly(QGauss constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<QGauss> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const QGauss& coeff, int power) {
  if (coeff.is_zero()) return {};
  std::vector<QGauss> c(static_cast<std::size_t>(power) + 1);
  c.back() = coeff;
  return UPoly(std::move(c));
}

UPoly UPoly::linear(const QGauss& root) { return UPoly(std::vector<QGauss>{-root, QGauss(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const QGauss& UPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(power)];
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<QGauss> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * QGauss(static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (QGauss(1) / leading());
}

UPoly UPoly::shifted(int shift) const {
  if (is_zero() || shift == 0) return *this;
  std::vector<QGauss> c(static_cast<std::size_t>(shift), QGauss());
  c.insert(c.end(), c_.begin(), c_.end());
  return UPoly(std::move(c));
}

QGauss UPoly::operator()(const QGauss& x) const {
  QGauss acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

CScalar UPoly::operator()(const CScalar& x) const {
  CScalar acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const QGauss& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QGauss> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

std::string UPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const QGauss& c = coeff(i);
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) {
      if (cs.front() == '-') {
        out += " - ";
        cs.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs == "1")
      cs.clear();
    else if (cs == "-1")
      cs = "-";
    else
      cs += "*";
    out += cs + var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

UPoly pow(const UPoly& base, int exponent) {
  UPoly result(1);
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

DivRem poly_divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divrem: division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<QGauss> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<QGauss> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const QGauss inv_lead = QGauss(1) / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const QGauss& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    QGauss factor = top * inv_lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeff(j);
    quot[static_cast<std::size_t>(i - db)] = std::move(factor);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly poly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = poly_divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool divides(const UPoly& b, const UPoly& a, UPoly* quotient) {
  if (b.is_zero()) return a.is_zero();
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

}  // namespace gause

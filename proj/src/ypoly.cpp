#include "gause/ypoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gause {

namespace {

const UPoly kZeroStratum{};

/// Monic gcd of all strata.
UPoly content(const YPoly& f) {
  UPoly g;
  for (const auto& s : f.strata()) {
    g = poly_gcd(g, s);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

YPoly divide_strata(const YPoly& f, const UPoly& d) {
  std::vector<UPoly> out;
  out.reserve(f.strata().size());
  for (const auto& s : f.strata()) out.push_back(poly_divrem(s, d).quotient);
  return YPoly(std::move(out));
}

YPoly primitive_part(const YPoly& f) {
  if (f.is_zero()) return f;
  return divide_strata(f, content(f));
}

/// Pseudo-remainder of a by b with respect to y.
YPoly pseudo_rem(YPoly a, const YPoly& b) {
  const int db = b.deg_y();
  const UPoly& lb = b.stratum(db);
  while (!a.is_zero() && a.deg_y() >= db) {
    const UPoly la = a.stratum(a.deg_y());
    a = a * lb - (b * la).shifted(a.deg_y() - db);
  }
  return a;
}

}  // namespace

YPoly::YPoly(UPoly constant_stratum) {
  if (!constant_stratum.is_zero()) s_.push_back(std::move(constant_stratum));
}

YPoly::YPoly(std::vector<UPoly> strata) : s_(std::move(strata)) { trim(); }

YPoly YPoly::monomial(const QGauss& coeff, int px, int py) {
  return YPoly(UPoly::monomial(coeff, px)).shifted(py);
}

void YPoly::trim() {
  while (!s_.empty() && s_.back().is_zero()) s_.pop_back();
}

int YPoly::total_degree() const {
  int d = kZeroDegree;
  for (int j = 0; j <= deg_y(); ++j)
    if (!s_[static_cast<std::size_t>(j)].is_zero())
      d = std::max(d, j + s_[static_cast<std::size_t>(j)].degree());
  return d;
}

const UPoly& YPoly::stratum(int j) const {
  if (j < 0 || j > deg_y()) return kZeroStratum;
  return s_[static_cast<std::size_t>(j)];
}

int YPoly::lowest_stratum() const {
  for (int j = 0; j <= deg_y(); ++j)
    if (!s_[static_cast<std::size_t>(j)].is_zero()) return j;
  return -1;
}

YPoly YPoly::dx() const {
  std::vector<UPoly> out;
  out.reserve(s_.size());
  for (const auto& s : s_) out.push_back(s.derivative());
  return YPoly(std::move(out));
}

YPoly YPoly::dy() const {
  if (s_.size() <= 1) return {};
  std::vector<UPoly> out(s_.size() - 1);
  for (std::size_t j = 1; j < s_.size(); ++j) out[j - 1] = s_[j] * QGauss(static_cast<long>(j));
  return YPoly(std::move(out));
}

YPoly YPoly::shifted(int shift) const {
  if (is_zero() || shift == 0) return *this;
  std::vector<UPoly> out(static_cast<std::size_t>(shift));
  out.insert(out.end(), s_.begin(), s_.end());
  return YPoly(std::move(out));
}

QGauss YPoly::operator()(const QGauss& x, const QGauss& y) const {
  QGauss acc;
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) {
    acc *= y;
    acc += (*it)(x);
  }
  return acc;
}

CScalar YPoly::operator()(const CScalar& x, const CScalar& y) const {
  CScalar acc = 0.0;
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) acc = acc * y + (*it)(x);
  return acc;
}

YPoly YPoly::operator-() const {
  YPoly out = *this;
  for (auto& s : out.s_) s = -s;
  return out;
}

YPoly& YPoly::operator+=(const YPoly& o) {
  if (o.s_.size() > s_.size()) s_.resize(o.s_.size());
  for (std::size_t j = 0; j < o.s_.size(); ++j) s_[j] += o.s_[j];
  trim();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
  if (o.s_.size() > s_.size()) s_.resize(o.s_.size());
  for (std::size_t j = 0; j < o.s_.size(); ++j) s_[j] -= o.s_[j];
  trim();
  return *this;
}

YPoly& YPoly::operator*=(const UPoly& s) {
  for (auto& x : s_) x = x * s;
  trim();
  return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> out(a.s_.size() + b.s_.size() - 1);
  for (std::size_t i = 0; i < a.s_.size(); ++i) {
    if (a.s_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.s_.size(); ++j) out[i + j] += a.s_[i] * b.s_[j];
  }
  return YPoly(std::move(out));
}

const QGauss& YPoly::leading() const { return stratum(deg_y()).leading(); }

YPoly YPoly::normalized() const {
  if (is_zero()) return {};
  return *this * (QGauss(1) / leading());
}

std::string YPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = deg_y(); j >= 0; --j) {
    const UPoly& s = stratum(j);
    if (s.is_zero()) continue;
    std::string term;
    if (j == 0) {
      term = s.to_string();
    } else {
      const std::string ypow = j == 1 ? "y" : "y^" + std::to_string(j);
      const std::string xs = s.to_string();
      if (xs == "1")
        term = ypow;
      else if (xs == "-1")
        term = "-" + ypow;
      else if (s.coeffs().size() - std::count_if(s.coeffs().begin(), s.coeffs().end(),
                                                 [](const QGauss& c) { return c.is_zero(); }) ==
               1)
        term = xs + "*" + ypow;
      else
        term = "(" + xs + ")*" + ypow;
    }
    if (!out.empty()) {
      if (term.front() == '-') {
        out += " - ";
        term.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += term;
  }
  return out;
}

YPoly pow(const YPoly& base, int exponent) {
  YPoly result(UPoly(1));
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

std::optional<YPoly> divide_exact(const YPoly& a, const YPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  if (a.is_zero()) return YPoly();
  const int db = b.deg_y();
  if (a.deg_y() < db) return std::nullopt;
  const UPoly& lb = b.stratum(db);
  std::vector<UPoly> quot(static_cast<std::size_t>(a.deg_y() - db + 1));
  YPoly rem = a;
  while (!rem.is_zero() && rem.deg_y() >= db) {
    const int shift = rem.deg_y() - db;
    UPoly q;
    if (!divides(lb, rem.stratum(rem.deg_y()), &q)) return std::nullopt;
    rem -= (b * q).shifted(shift);
    quot[static_cast<std::size_t>(shift)] = std::move(q);
  }
  if (!rem.is_zero()) return std::nullopt;
  return YPoly(std::move(quot));
}

YPoly gcd(const YPoly& a, const YPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const UPoly cont = poly_gcd(content(a), content(b));
  YPoly p = primitive_part(a);
  YPoly q = primitive_part(b);
  if (p.deg_y() < q.deg_y()) std::swap(p, q);
  while (!q.is_zero() && q.deg_y() > 0) {
    YPoly r = primitive_part(pseudo_rem(p, q));
    p = std::move(q);
    q = std::move(r);
  }
  // q == 0: p is the primitive gcd; q a nonzero x-only primitive: gcd is 1.
  YPoly prim = q.is_zero() ? p : YPoly(UPoly(1));
  return (prim * cont).normalized();
}

}  // namespace gause

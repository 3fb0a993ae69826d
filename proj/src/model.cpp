#include "gause/model.hpp"

#include <algorithm>

namespace gause {

namespace {

bool is_zero(const QGauss& z) { return z.is_zero(); }
bool is_zero(const CScalar& z) { return z == CScalar(0.0); }

template <class S>
ParamClass classify(const ParamTuple<S>& v) {
  if (is_zero(v.k)) throw std::invalid_argument("k must be nonzero");
  ParamClass pc;
  pc.in_A = !is_zero(v.r) && !is_zero(v.alpha);
  pc.in_B = is_zero(v.alpha * v.c - v.gamma) && is_zero(v.gamma * v.beta);
  if (is_zero(v.alpha))
    pc.primary = ParamCase::CaseAAlphaZero;
  else if (is_zero(v.r))
    pc.primary = ParamCase::CaseBRZero;
  else if (pc.in_B)
    pc.primary = ParamCase::CaseCInB;
  else
    pc.primary = ParamCase::GenericAMinusB;
  return pc;
}

void check_shape(int m) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
}

/// Appends the parts of `candidate` not already covered by `factors`.
void add_factor(std::vector<UPoly>& factors, UPoly candidate) {
  if (candidate.is_zero()) return;
  for (const auto& f : factors) {
    UPoly q;
    while (candidate.degree() >= f.degree() && divides(f, candidate, &q)) candidate = q;
  }
  if (!candidate.is_constant()) factors.push_back(candidate.monic());
}

std::vector<UPoly> pi_factors(const ParamTuple<QGauss>& v, int m) {
  std::vector<UPoly> out;
  add_factor(out, UPoly::x());
  add_factor(out, UPoly::linear(v.k));
  for (auto& piece : split_x_m_plus_beta(v.beta, m)) add_factor(out, piece);
  return out;
}

}  // namespace

GauseParams GauseParams::exact(const ParamTuple<QGauss>& values, int m) {
  check_shape(m);
  GauseParams p;
  p.m_ = m;
  p.exact_ = true;
  p.exact_values_ = values;
  p.numeric_ = values.map([](const QGauss& z) { return z.to_complex(); });
  return p;
}

GauseParams GauseParams::numeric(const ParamTuple<CScalar>& values, int m) {
  check_shape(m);
  GauseParams p;
  p.m_ = m;
  p.exact_ = false;
  p.numeric_ = values.map([](const CScalar& z) { return require_finite(z, "parameter"); });
  return p;
}

bool GauseParams::is_real() const {
  const auto& v = numeric_;
  for (const CScalar* z : {&v.alpha, &v.r, &v.c, &v.k, &v.gamma, &v.beta})
    if (z->imag() != 0.0) return false;
  return true;
}

const ParamTuple<QGauss>& GauseParams::exact_values() const {
  if (!exact_)
    throw NumericModeError(
        "operation requires exact (rational) parameters; numeric-mode parameters were supplied");
  return exact_values_;
}

std::string to_string(ParamCase c) {
  switch (c) {
    case ParamCase::GenericAMinusB: return "GENERIC_A_MINUS_B";
    case ParamCase::CaseAAlphaZero: return "CASE_A_ALPHA_ZERO";
    case ParamCase::CaseBRZero: return "CASE_B_R_ZERO";
    case ParamCase::CaseCInB: return "CASE_C_IN_B";
  }
  return "?";
}

ParamCase parse_param_case(const std::string& s) {
  for (auto c : {ParamCase::GenericAMinusB, ParamCase::CaseAAlphaZero, ParamCase::CaseBRZero,
                 ParamCase::CaseCInB})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown parameter class \"" + s + "\"");
}

std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::V1: return "V1";
    case FieldKind::V2: return "V2";
    case FieldKind::ReducedA: return "REDUCED_A";
    case FieldKind::ReducedB: return "REDUCED_B";
    case FieldKind::ReducedC: return "REDUCED_C";
  }
  return "?";
}

ParamClass classify_params(const GauseParams& params) {
  if (params.is_exact()) return classify(params.exact_values());
  return classify(params.values());
}

UPoly pi_poly(const ParamTuple<QGauss>& v, int m) {
  return UPoly::x() * UPoly::linear(v.k) * (UPoly::monomial(QGauss(1), m) + UPoly(v.beta));
}

std::vector<UPoly> split_x_m_plus_beta(const QGauss& beta, int m) {
  if (m == 1) return {UPoly::linear(-beta)};
  if (m == 2) {
    if (auto s = gauss_sqrt(-beta)) {
      if (s->is_zero()) return {UPoly::x(), UPoly::x()};
      return {UPoly::linear(*s), UPoly::linear(-*s)};
    }
  }
  return {UPoly::monomial(QGauss(1), m) + UPoly(beta)};
}

PlanarField build_field(const GauseParams& params) {
  const auto& v = params.exact_values();
  const int m = params.m();
  const ParamClass pc = classify(v);
  const QGauss rk = v.r / v.k;
  const UPoly pi = pi_poly(v, m);
  const UPoly xm = UPoly::monomial(QGauss(1), m);
  const QGauss growth = v.alpha * v.c - v.gamma;

  PlanarField f;
  switch (pc.primary) {
    case ParamCase::CaseAAlphaZero:
      f.kind = FieldKind::ReducedA;
      f.p = YPoly(-(pi * rk));
      f.q = YPoly(-((xm + UPoly(v.beta)) * v.gamma)).shifted(1);
      f.root_factors = pi_factors(v, m);
      break;
    case ParamCase::CaseBRZero:
      f.kind = FieldKind::ReducedB;
      f.p = YPoly(-(xm * v.alpha));
      f.q = YPoly(UPoly(-(v.gamma * v.beta)) + xm * growth);
      f.root_factors = {UPoly::x()};
      break;
    case ParamCase::CaseCInB:
      f.kind = FieldKind::ReducedC;
      f.p = YPoly(-(pi * rk));
      f.q = YPoly();
      f.root_factors = pi_factors(v, m);
      break;
    case ParamCase::GenericAMinusB:
      if (!v.beta.is_zero()) return build_unified_field(params);
      f.kind = FieldKind::V2;
      f.p = YPoly(std::vector<UPoly>{-(UPoly::x() * UPoly::linear(v.k) * rk), UPoly(-v.alpha)});
      f.q = YPoly(UPoly(growth)).shifted(1);
      f.root_factors = {UPoly::x(), UPoly::linear(v.k)};
      break;
  }
  return f;
}

PlanarField build_unified_field(const GauseParams& params) {
  const auto& v = params.exact_values();
  const int m = params.m();
  classify(v);
  const UPoly xm = UPoly::monomial(QGauss(1), m);
  PlanarField f;
  f.kind = FieldKind::V1;
  f.p = YPoly(std::vector<UPoly>{-(pi_poly(v, m) * (v.r / v.k)), -(xm * v.alpha)});
  f.q = YPoly(UPoly(-(v.gamma * v.beta)) + xm * (v.alpha * v.c - v.gamma)).shifted(1);
  f.root_factors = pi_factors(v, m);
  return f;
}

YPoly field_divergence(const PlanarField& field) { return field.p.dx() + field.q.dy(); }

AbelEq build_abel(const GauseParams& params) {
  const auto& v = params.exact_values();
  const int m = params.m();
  classify(v);
  const UPoly xm = UPoly::monomial(QGauss(1), m);
  return {pi_poly(v, m) * (v.r / v.k), xm * v.alpha,
          UPoly(v.gamma * v.beta) - xm * (v.alpha * v.c - v.gamma)};
}

}  // namespace gause

#include "gause/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <type_traits>
#include <stdexcept>

namespace gause {

namespace {

QGauss ipow(const QGauss& b, int e) { return pow(b, e); }
CScalar ipow(const CScalar& b, int e) {
  CScalar out(1.0);
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

template <class S>
S num(long n) {
  if constexpr (std::is_same_v<S, QGauss>)
    return QGauss(n);
  else
    return CScalar(static_cast<double>(n));
}

bool is_zero(const QGauss& z) { return z.is_zero(); }
bool is_zero(const CScalar& z) { return std::abs(z) <= 1e-12; }

template <class S>
struct Gause {
  const ParamTuple<S>& v;
  int m;

  S growth() const { return v.alpha * v.c - v.gamma; }
  S Pi(const S& x) const { return x * (x - v.k) * (ipow(x, m) + v.beta); }
  S dPi(const S& x) const {
    const S block = ipow(x, m) + v.beta;
    return (x - v.k) * block + x * block + x * (x - v.k) * num<S>(m) * ipow(x, m - 1);
  }
};

const ParamTuple<QGauss>* exact_values_or_null(const GauseParams& params) {
  return params.is_exact() ? &params.exact_values() : nullptr;
}

bool params_beta_zero(const GauseParams& params) {
  if (params.is_exact()) return params.exact_values().beta.is_zero();
  return params.values().beta == CScalar(0.0);
}

/// All m-th roots of w, exact when they lie in Q(i).
std::vector<Value> mth_roots(const Value& w, int m) {
  if (w.exact) {
    if (m == 1) return {*w.exact};
    if (w.exact->is_zero()) return std::vector<Value>(static_cast<std::size_t>(m), QGauss());
    if (m == 2)
      if (auto s = gauss_sqrt(*w.exact)) return {*s, -*s};
  }
  std::vector<Value> out;
  if (w.approx == CScalar(0.0)) return std::vector<Value>(static_cast<std::size_t>(m), CScalar(0.0));
  const CScalar principal = std::pow(w.approx, 1.0 / m);
  for (int j = 0; j < m; ++j)
    out.emplace_back(principal * std::polar(1.0, 2.0 * std::numbers::pi * j / m));
  return out;
}

std::pair<Value, Value> table_row(const std::string& label, const GauseParams& params,
                                  const std::pair<Value, Value>& pt) {
  const bool exact = params.is_exact() && pt.first.exact && pt.second.exact;
  auto compute = [&](const auto& v, const auto& xs) {
    using S = std::decay_t<decltype(xs)>;
    Gause<S> g{v, params.m()};
    const int m = params.m();
    const S rk = v.r / v.k;
    S T, D;
    if (label == "P1") {
      T = -rk * g.dPi(xs) + num<S>(m) * v.r * v.alpha * v.beta * v.c * (xs - v.k) / (v.k * g.growth());
      D = -(num<S>(m) * v.alpha * v.beta * v.beta * v.gamma * v.r * v.c * (xs - v.k)) /
          (v.k * g.growth());
    } else if (label == "P2") {
      T = -rk * g.dPi(v.k) - v.gamma * v.beta + g.growth() * ipow(v.k, m);
      D = rk * g.dPi(v.k) * (v.gamma * v.beta - g.growth() * ipow(v.k, m));
    } else if (label == "P3") {
      T = v.r * v.beta - v.gamma * v.beta;
      D = -v.r * v.gamma * v.beta * v.beta;
    } else if (label == "P4") {
      T = -rk * g.dPi(xs) - v.alpha * v.beta * v.c;
      D = rk * g.dPi(xs) * v.alpha * v.beta * v.c;
    } else if (label == "Q1") {
      T = -v.r - v.gamma + v.alpha * v.c;
      D = -v.r * (-v.gamma + v.alpha * v.c);
    } else if (label == "Q2") {
      T = v.r - v.gamma + v.alpha * v.c;
      D = v.r * (-v.gamma + v.alpha * v.c);
    } else {
      throw std::invalid_argument("trace_det: unknown equilibrium label " + label);
    }
    return std::pair<Value, Value>{Value(T), Value(D)};
  };
  if (exact) return compute(params.exact_values(), *pt.first.exact);
  return compute(params.values(), pt.first.approx);
}

double rel_diff(const Value& a, const Value& b) {
  const double scale = std::max({std::abs(a.approx), std::abs(b.approx), 1e-300});
  return std::abs(a.approx - b.approx) / scale;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Nonresonant: return "NONRESONANT";
    case Verdict::Resonant: return "RESONANT";
    case Verdict::ZeroTraceResonant: return "ZERO_TRACE_RESONANT";
    case Verdict::DegenerateZeroEigenvalue: return "DEGENERATE_ZERO_EIGENVALUE";
    case Verdict::UndecidedNumeric: return "UNDECIDED_NUMERIC";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  for (auto v : {Verdict::Nonresonant, Verdict::Resonant, Verdict::ZeroTraceResonant,
                 Verdict::DegenerateZeroEigenvalue, Verdict::UndecidedNumeric})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict \"" + s + "\"");
}

std::string EquilibriumReport::name() const {
  if (label == "P1" || label == "P4") return label + "_" + std::to_string(branch);
  return label;
}

std::optional<Rational> detect_rational(double x, long long max_den, double tol, double separation) {
  if (!std::isfinite(x)) return std::nullopt;
  const double accept = tol * std::max(1.0, std::abs(x));
  long long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 9e15) break;
    const long long ai = static_cast<long long>(a);
    const long long h = ai * h1 + h2;
    const long long k = ai * k1 + k2;
    if (k > max_den) break;
    const double err = std::abs(x - static_cast<double>(h) / static_cast<double>(k));
    const double kd = static_cast<double>(k);
    if (err <= accept && err * kd * kd <= separation) {
      Rational q(static_cast<long>(h), static_cast<long>(k));
      q.canonicalize();
      return q;
    }
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    const double frac = r - a;
    if (frac <= 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

LFResult lemma_lf_membership(const QGauss& t) {
  if (t.is_zero()) throw std::invalid_argument("lemma_lf_membership: t must be nonzero");
  const QGauss one_minus_t = QGauss(1) - t;
  LFResult out;
  if (auto s = gauss_sqrt(one_minus_t))
    out.s = *s;
  else
    out.s = std::sqrt(one_minus_t.to_complex());
  if (!t.is_real()) {
    out.membership = LFMembership::NotInQNeg;
    out.disjunct = "t not real";
    return out;
  }
  if (sgn(t.re()) > 0) {
    out.membership = LFMembership::NotInQNeg;
    out.disjunct = "t > 0";
    return out;
  }
  if (auto s = rational_sqrt(one_minus_t.re())) {
    out.membership = LFMembership::InQNeg;
    out.s_rational = *s;
    out.s = QGauss(*s);
    out.disjunct = "s rational";
  } else {
    out.membership = LFMembership::NotInQNeg;
    out.disjunct = "s irrational";
  }
  return out;
}

LFResult lemma_lf_membership(CScalar t, const NumericTolerance& tol) {
  require_finite(t, "t");
  if (t == CScalar(0.0)) throw std::invalid_argument("lemma_lf_membership: t must be nonzero");
  LFResult out;
  out.s = std::sqrt(CScalar(1.0) - t);
  const double scale = std::max(1.0, std::abs(t));
  if (std::abs(t.imag()) > tol.zero * scale) {
    out.membership = LFMembership::NotInQNeg;
    out.disjunct = "t not real";
    return out;
  }
  if (t.real() > tol.zero * scale) {
    out.membership = LFMembership::NotInQNeg;
    out.disjunct = "t > 0";
    return out;
  }
  if (t.real() >= -tol.zero * scale) {
    out.disjunct = "inconclusive";
    return out;
  }
  const double s = std::sqrt(1.0 - t.real());
  out.s = CScalar(s);
  if (auto q = detect_rational(s, tol.cf_max_den, tol.cf_tol, tol.cf_separation)) {
    out.membership = LFMembership::InQNeg;
    out.s_rational = *q;
    out.disjunct = "s rational";
  } else {
    out.disjunct = "inconclusive";
  }
  return out;
}

namespace {

void finish_verdict(ResonanceVerdict& v, const LFResult& lf) {
  v.lf = lf;
  switch (lf.membership) {
    case LFMembership::InQNeg: {
      v.verdict = Verdict::Resonant;
      const Rational s = abs(*lf.s_rational);
      v.ratio = (1 + s) / (1 - s);
      v.evidence = "s = " + to_string(s) + " is rational and t < 0; eigenvalue ratio " +
                   to_string(*v.ratio);
      break;
    }
    case LFMembership::NotInQNeg:
      v.verdict = Verdict::Nonresonant;
      v.no_local_analytic_first_integral = true;
      v.evidence = "nonresonant because " + lf.disjunct +
                   "; no analytic first integral exists near the point";
      break;
    case LFMembership::Undecided:
      v.verdict = Verdict::UndecidedNumeric;
      v.evidence = "rationality of s could not be decided in floating point (" + lf.disjunct + ")";
      break;
  }
}

}  // namespace

ResonanceVerdict nonresonance_check(const QGauss& T, const QGauss& D) {
  ResonanceVerdict v;
  if (D.is_zero()) {
    v.verdict = Verdict::DegenerateZeroEigenvalue;
    v.evidence = "D = 0: zero eigenvalue";
    return v;
  }
  if (T.is_zero()) {
    v.verdict = Verdict::ZeroTraceResonant;
    v.ratio = Rational(-1);
    v.evidence = "T = 0: eigenvalue ratio -1";
    return v;
  }
  const QGauss t = QGauss(4) * D / (T * T);
  v.t = Value(t);
  finish_verdict(v, lemma_lf_membership(t));
  return v;
}

ResonanceVerdict nonresonance_check(CScalar T, CScalar D, const NumericTolerance& tol) {
  require_finite(T, "T");
  require_finite(D, "D");
  ResonanceVerdict v;
  v.tolerance = tol;
  const double T2 = std::norm(T);
  if (std::abs(D) <= tol.zero * std::max(1.0, T2)) {
    v.verdict = Verdict::DegenerateZeroEigenvalue;
    v.evidence = "D = 0 within tolerance: zero eigenvalue";
    return v;
  }
  if (T2 <= tol.zero * std::max(1.0, std::abs(D))) {
    v.verdict = Verdict::ZeroTraceResonant;
    v.ratio = Rational(-1);
    v.evidence = "T = 0 within tolerance: eigenvalue ratio -1";
    return v;
  }
  const CScalar t = 4.0 * D / (T * T);
  v.t = Value(t);
  finish_verdict(v, lemma_lf_membership(t, tol));
  return v;
}

std::vector<EquilibriumReport> find_equilibria(const GauseParams& params) {
  classify_params(params);  // rejects k == 0
  const int m = params.m();
  const auto* ev = exact_values_or_null(params);
  const auto& nv = params.values();
  std::vector<EquilibriumReport> out;

  auto make = [](std::string label, int branch) {
    EquilibriumReport r;
    r.label = std::move(label);
    r.branch = branch;
    return r;
  };
  // Applicability expression evaluated exactly where possible.
  auto nonzero = [&](const Value& x, auto&& expr) -> bool {
    if (ev && x.exact) return !is_zero(expr(*ev, *x.exact));
    return !is_zero(expr(nv, x.approx));
  };
  auto value_of = [&](auto&& expr) -> Value {
    if (ev) return Value(expr(*ev));
    return Value(expr(nv));
  };

  if (params_beta_zero(params)) {
    for (const char* label : {"Q1", "Q2"}) {
      auto r = make(label, 0);
      const Value x = std::string(label) == "Q1" ? value_of([](const auto& v) { return v.k; })
                                                 : Value(QGauss());
      r.point = std::pair<Value, Value>{x, Value(QGauss())};
      r.applicable = nonzero(x, [](const auto& v, const auto&) { return v.r * (v.alpha * v.c - v.gamma); });
      r.reason = r.applicable ? "r(alpha c - gamma) != 0" : "r(alpha c - gamma) = 0";
      out.push_back(std::move(r));
    }
    return out;
  }

  // P1_j
  const Value growth = value_of([](const auto& v) { return v.alpha * v.c - v.gamma; });
  const bool growth_zero = growth.exact ? growth.exact->is_zero() : is_zero(growth.approx);
  if (growth_zero) {
    auto r = make("P1", 0);
    r.reason = "alpha c - gamma = 0: x* undefined";
    out.push_back(std::move(r));
  } else {
    const Value w = value_of([](const auto& v) { return v.beta * v.gamma / (v.alpha * v.c - v.gamma); });
    const auto roots = mth_roots(w, m);
    for (int j = 0; j < m; ++j) {
      auto r = make("P1", j);
      const Value& xs = roots[static_cast<std::size_t>(j)];
      const bool y_defined = nonzero(xs, [](const auto& v, const auto&) { return v.k * v.alpha * v.gamma * v.beta; });
      if (y_defined) {
        auto ystar = [m](const auto& v, const auto& x) {
          using S = std::decay_t<decltype(x)>;
          Gause<S> g{v, m};
          return -(v.r * g.growth() * g.Pi(x)) / (v.k * v.alpha * v.gamma * v.beta);
        };
        const Value y = (ev && xs.exact) ? Value(ystar(*ev, *xs.exact)) : Value(ystar(nv, xs.approx));
        r.point = std::pair<Value, Value>{xs, y};
      }
      r.applicable = y_defined && nonzero(xs, [](const auto& v, const auto& x) {
                       return v.alpha * v.gamma * v.r * v.c * (x - v.k);
                     });
      r.reason = r.applicable ? "alpha gamma r c (x* - k) != 0" : "alpha gamma r c (x* - k) = 0";
      out.push_back(std::move(r));
    }
  }

  {
    auto r = make("P2", 0);
    const Value k = value_of([](const auto& v) { return v.k; });
    r.point = std::pair<Value, Value>{k, Value(QGauss())};
    r.applicable = nonzero(k, [m](const auto& v, const auto& x) {
      using S = std::decay_t<decltype(x)>;
      Gause<S> g{v, m};
      return v.r * g.dPi(x) * (v.gamma * v.beta - g.growth() * ipow(x, m));
    });
    r.reason = r.applicable ? "r Pi'(k) (gamma beta - (alpha c - gamma) k^m) != 0"
                            : "r Pi'(k) (gamma beta - (alpha c - gamma) k^m) = 0";
    out.push_back(std::move(r));
  }
  {
    auto r = make("P3", 0);
    r.point = std::pair<Value, Value>{Value(QGauss()), Value(QGauss())};
    r.applicable = nonzero(Value(QGauss()), [](const auto& v, const auto&) { return v.r * v.gamma; });
    r.reason = r.applicable ? "r gamma != 0" : "r gamma = 0";
    out.push_back(std::move(r));
  }
  {
    const Value w = value_of([](const auto& v) { return -v.beta; });
    const auto roots = mth_roots(w, m);
    for (int j = 0; j < m; ++j) {
      auto r = make("P4", j);
      const Value& xs = roots[static_cast<std::size_t>(j)];
      r.point = std::pair<Value, Value>{xs, Value(QGauss())};
      r.applicable = nonzero(xs, [m](const auto& v, const auto& x) {
        using S = std::decay_t<decltype(x)>;
        Gause<S> g{v, m};
        return v.r * g.dPi(x) * v.alpha * v.beta * v.c;
      });
      r.reason = r.applicable ? "r Pi'(x*) alpha beta c != 0" : "r Pi'(x*) alpha beta c = 0";
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::pair<Value, Value> trace_det(const GauseParams& params, const EquilibriumReport& eq) {
  if (!eq.applicable || !eq.point)
    throw std::invalid_argument("trace_det: equilibrium " + eq.name() + " is not applicable (" +
                                eq.reason + ")");
  return table_row(eq.label, params, *eq.point);
}

std::pair<Value, Value> jacobian_trace_det(const GauseParams& params,
                                           const std::pair<Value, Value>& point) {
  const bool beta_zero = params_beta_zero(params);
  auto compute = [&](const auto& v, const auto& x, const auto& y) {
    using S = std::decay_t<decltype(x)>;
    const int m = params.m();
    const S rk = v.r / v.k;
    S j11, j12, j21, j22;
    if (beta_zero) {
      j11 = -rk * (num<S>(2) * x - v.k);
      j12 = -v.alpha;
      j21 = num<S>(0);
      j22 = v.alpha * v.c - v.gamma;
    } else {
      Gause<S> g{v, m};
      j11 = -rk * g.dPi(x) - num<S>(m) * v.alpha * ipow(x, m - 1) * y;
      j12 = -v.alpha * ipow(x, m);
      j21 = num<S>(m) * g.growth() * ipow(x, m - 1) * y;
      j22 = -v.gamma * v.beta + g.growth() * ipow(x, m);
    }
    return std::pair<Value, Value>{Value(j11 + j22), Value(j11 * j22 - j12 * j21)};
  };
  if (params.is_exact() && point.first.exact && point.second.exact)
    return compute(params.exact_values(), *point.first.exact, *point.second.exact);
  return compute(params.values(), point.first.approx, point.second.approx);
}

std::vector<EquilibriumReport> analyze_equilibria(const GauseParams& params,
                                                  const NumericTolerance& tol) {
  auto reports = find_equilibria(params);
  for (auto& r : reports) {
    if (!r.applicable) continue;
    auto [T, D] = trace_det(params, r);
    auto [Tj, Dj] = jacobian_trace_det(params, *r.point);
    r.table_mismatch = std::max(rel_diff(T, Tj), rel_diff(D, Dj));
    if (T.exact && Tj.exact && D.exact && Dj.exact && (*T.exact != *Tj.exact || *D.exact != *Dj.exact))
      r.table_mismatch = std::max(r.table_mismatch, 1.0);
    if (r.label == "P1") {
      // Trace through the unsimplified Jacobian entry (m r/(k x*)) Pi(x*).
      const Value& xs = r.point->first;
      auto alt = [&](const auto& v, const auto& x) {
        using S = std::decay_t<decltype(x)>;
        Gause<S> g{v, params.m()};
        return -(v.r / v.k) * g.dPi(x) + num<S>(params.m()) * v.r / (v.k * x) * g.Pi(x);
      };
      const Value Talt = (params.is_exact() && xs.exact) ? Value(alt(params.exact_values(), *xs.exact))
                                                         : Value(alt(params.values(), xs.approx));
      r.p1_forms_agree = (T.exact && Talt.exact) ? *T.exact == *Talt.exact : rel_diff(T, Talt) < 1e-10;
    }
    r.T = T;
    r.D = D;
    r.T_jacobian = Tj;
    r.D_jacobian = Dj;
    r.verdict = (T.exact && D.exact) ? nonresonance_check(*T.exact, *D.exact)
                                     : nonresonance_check(T.approx, D.approx, tol);
  }
  return reports;
}

}  // namespace gause

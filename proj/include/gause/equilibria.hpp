#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gause/model.hpp"

namespace gause {

/// A complex double together with its exact value when one is known.
struct Value {
  CScalar approx;
  std::optional<QGauss> exact;

  Value() = default;
  Value(const QGauss& q) : approx(q.to_complex()), exact(q) {}  // NOLINT(google-explicit-constructor)
  Value(CScalar z) : approx(z) {}                                // NOLINT(google-explicit-constructor)

  bool is_exact() const { return exact.has_value(); }
  friend bool operator==(const Value& a, const Value& b) {
    return a.exact == b.exact && (a.exact || a.approx == b.approx);
  }
};

enum class Verdict { Nonresonant, Resonant, ZeroTraceResonant, DegenerateZeroEigenvalue, UndecidedNumeric };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

enum class LFMembership { InQNeg, NotInQNeg, Undecided };

/// Outcome of the test "F(t) = (1 - s)/(1 + s) is a negative rational",
/// s = sqrt(1 - t).
struct LFResult {
  LFMembership membership = LFMembership::Undecided;
  Value s;
  /// s as a rational when it was found to be one (exactly or numerically).
  std::optional<Rational> s_rational;
  /// Which disjunct decided the outcome: "t not real", "t > 0",
  /// "s irrational", "s rational", or "inconclusive".
  std::string disjunct;
};

/// Exact mode. Throws std::invalid_argument for t == 0.
LFResult lemma_lf_membership(const QGauss& t);

struct NumericTolerance {
  /// Relative tolerance for treating a float as real / zero.
  double zero = 1e-12;
  /// Continued-fraction acceptance tolerance and denominator bound.
  double cf_tol = 1e-10;
  long long cf_max_den = 1000000;
  /// A convergent p/q is accepted only if q^2 |x - p/q| is below this, i.e.
  /// the match is far better than a generic real admits.
  double cf_separation = 1e-6;
};

/// Numeric mode: continued-fraction detection of a rational s; Undecided
/// when no convergent within the bounds matches. Throws
/// std::invalid_argument for t == 0.
LFResult lemma_lf_membership(CScalar t, const NumericTolerance& tol = {});

/// First continued-fraction convergent p/q of x with q <= max_den, error at
/// most tol * max(1, |x|) and q^2 * error <= separation.
std::optional<Rational> detect_rational(double x, long long max_den, double tol,
                                        double separation = 1e-6);

struct ResonanceVerdict {
  Verdict verdict = Verdict::UndecidedNumeric;
  std::optional<Value> t;
  std::optional<LFResult> lf;
  /// Eigenvalue ratio (1 + s)/(1 - s) when it is a negative rational
  /// (|ratio| >= 1), or -1 for zero trace.
  std::optional<Rational> ratio;
  std::string evidence;
  /// Tolerances used (numeric verdicts only).
  std::optional<NumericTolerance> tolerance;
  /// Set for NONRESONANT: no analytic first integral near the point.
  bool no_local_analytic_first_integral = false;
};

ResonanceVerdict nonresonance_check(const QGauss& T, const QGauss& D);
ResonanceVerdict nonresonance_check(CScalar T, CScalar D, const NumericTolerance& tol = {});

struct EquilibriumReport {
  /// P1 | P2 | P3 | P4 | Q1 | Q2; branch holds the m-th root branch for P1, P4.
  std::string label;
  int branch = 0;
  std::optional<std::pair<Value, Value>> point;
  bool applicable = false;
  std::string reason;
  std::optional<Value> T;
  std::optional<Value> D;
  std::optional<ResonanceVerdict> verdict;
  /// Direct Jacobian trace/determinant and the relative disagreement with
  /// the closed forms (0 for exact agreement).
  std::optional<Value> T_jacobian;
  std::optional<Value> D_jacobian;
  double table_mismatch = 0.0;
  /// P1 only: the trace evaluated through Pi(x*)/x* agrees with the
  /// rewritten closed form.
  std::optional<bool> p1_forms_agree;

  std::string name() const;
};

/// Equilibria of the polynomial field (beta != 0: P1_j, P2, P3, P4_j;
/// beta == 0: Q1, Q2) with their applicability conditions evaluated.
/// Throws std::invalid_argument when k == 0.
std::vector<EquilibriumReport> find_equilibria(const GauseParams& params);

/// Closed-form trace and determinant for an applicable report.
/// Throws std::invalid_argument when the report is not applicable.
std::pair<Value, Value> trace_det(const GauseParams& params, const EquilibriumReport& eq);

/// Trace and determinant of the Jacobian of the polynomial field at a point.
std::pair<Value, Value> jacobian_trace_det(const GauseParams& params, const std::pair<Value, Value>& point);

/// find_equilibria, then closed forms, Jacobian cross-check and verdicts.
std::vector<EquilibriumReport> analyze_equilibria(const GauseParams& params,
                                                  const NumericTolerance& tol = {});

}  // namespace gause

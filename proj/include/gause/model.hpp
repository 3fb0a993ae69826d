#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gause/scalar.hpp"
#include "gause/upoly.hpp"
#include "gause/ypoly.hpp"

namespace gause {

/// Raised when an exact-only operation receives numeric-mode parameters.
class NumericModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class S>
struct ParamTuple {
  S alpha, r, c, k, gamma, beta;

  template <class F>
  auto map(F&& f) const {
    using T = decltype(f(alpha));
    return ParamTuple<T>{f(alpha), f(r), f(c), f(k), f(gamma), f(beta)};
  }
  friend bool operator==(const ParamTuple&, const ParamTuple&) = default;
};

/// The six Gause parameters plus the Holling exponent m. Exact mode carries
/// Gaussian rationals; numeric mode only complex doubles, and exact-only
/// operations refuse it.
class GauseParams {
 public:
  static GauseParams exact(const ParamTuple<QGauss>& values, int m);
  static GauseParams numeric(const ParamTuple<CScalar>& values, int m);

  int m() const { return m_; }
  bool is_exact() const { return exact_; }
  /// True when every parameter has zero imaginary part.
  bool is_real() const;

  /// Throws NumericModeError in numeric mode.
  const ParamTuple<QGauss>& exact_values() const;
  const ParamTuple<CScalar>& values() const { return numeric_; }

  friend bool operator==(const GauseParams& a, const GauseParams& b) {
    return a.m_ == b.m_ && a.exact_ == b.exact_ && a.numeric_ == b.numeric_ &&
           (!a.exact_ || a.exact_values_ == b.exact_values_);
  }

 private:
  GauseParams() = default;
  int m_ = 1;
  bool exact_ = false;
  ParamTuple<QGauss> exact_values_{};
  ParamTuple<CScalar> numeric_{};
};

enum class ParamCase { GenericAMinusB, CaseAAlphaZero, CaseBRZero, CaseCInB };

struct ParamClass {
  ParamCase primary = ParamCase::GenericAMinusB;
  bool in_A = false;
  bool in_B = false;
  friend bool operator==(const ParamClass&, const ParamClass&) = default;
};

std::string to_string(ParamCase c);
ParamCase parse_param_case(const std::string& s);

/// Throws std::invalid_argument when k == 0.
ParamClass classify_params(const GauseParams& params);

enum class FieldKind { V1, V2, ReducedA, ReducedB, ReducedC };
std::string to_string(FieldKind k);

/// Polynomial vector field p d/dx + q d/dy over Q(i).
struct PlanarField {
  YPoly p;
  YPoly q;
  FieldKind kind = FieldKind::V1;
  /// Distinct monic factors of the y-free part of p that the exact search can
  /// use (x, x - k, and the split pieces of x^m + beta).
  std::vector<UPoly> root_factors;
};

/// Pi_{m+2}(x) = x (x - k) (x^m + beta).
UPoly pi_poly(const ParamTuple<QGauss>& v, int m);

/// Monic factors of x^m + beta over Q(i): linear for m = 1, the two linear
/// factors for m = 2 when -beta is a square in Q(i), otherwise one block.
std::vector<UPoly> split_x_m_plus_beta(const QGauss& beta, int m);

/// Reduced polynomial field for the parameter class (exact mode only).
/// Throws std::invalid_argument for k == 0 or m < 1, NumericModeError in
/// numeric mode.
PlanarField build_field(const GauseParams& params);

/// The field -( (r/k) Pi + alpha x^m y ) d/dx + (-gamma beta + (alpha c - gamma) x^m) y d/dy
/// for any beta (for beta == 0 this is x^m times the beta == 0 field).
PlanarField build_unified_field(const GauseParams& params);

YPoly field_divergence(const PlanarField& field);

/// (b0 + b1 y) dy/dx = a1 y
struct AbelEq {
  UPoly b0;
  UPoly b1;
  UPoly a1;
};

AbelEq build_abel(const GauseParams& params);

}  // namespace gause

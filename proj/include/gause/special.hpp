#pragma once

#include <optional>

#include "gause/model.hpp"

namespace gause {

struct BesselEval {
  double nu = 0.0;
  double z = 0.0;
  double J = 0.0;
  double dJ = 0.0;
  double Y = 0.0;
  double dY = 0.0;
};

/// J_nu, J'_nu, Y_nu, Y'_nu for real nu with |nu| <= 50 and z > 0.
/// Negative orders use the reflection formulas. Throws std::domain_error
/// otherwise.
BesselEval bessel_jy(double nu, double z);

/// Data of the Bessel-form first integral for gamma = 0, m = 1 with real
/// parameters and z(y) = (2/c) sqrt(r y / (alpha k)) real for y > 0.
struct SFunctContext {
  double r = 0.0, alpha = 0.0, c = 0.0, k = 0.0, beta = 0.0;
  /// Bessel order r(k + beta)/(alpha c k).
  double nu = 0.0;
  /// Exponent of the prefactor y^a in w(y), a = r(k - beta)/(2 alpha c k).
  double a = 0.0;

  double z(double y) const;
};

/// r(k + beta)/(alpha c k). Throws std::invalid_argument unless gamma = 0,
/// m = 1 and r alpha c k != 0, and std::domain_error for complex parameters.
double compute_order(const GauseParams& params);

/// Additionally requires c > 0 and r/(alpha k) > 0 (std::domain_error).
SFunctContext make_sfunct_context(const GauseParams& params);

struct ABH {
  double A = 0.0;
  double B = 0.0;
  /// A/B, absent when B == 0.
  std::optional<double> H;
};

/// Throws std::domain_error for y <= 0.
ABH eval_ABH(const SFunctContext& ctx, double x, double y);

/// Max absolute residual of the second-order linear equation for
/// w = y^a J_nu(z(y)) and w = y^a Y_nu(z(y)), using ctx.nu as the order.
double tric_residual(const SFunctContext& ctx, double y);

/// |dx/dy - rhs| of the Riccati equation with dx/dy = p/q taken from the
/// field. Throws std::invalid_argument unless gamma = 0 and m = 1, and
/// std::domain_error where q = 0.
double riccati_residual(const GauseParams& params, double x, double y);

}  // namespace gause

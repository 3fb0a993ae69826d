#include "gause/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gause {

namespace {

using std::numbers::pi;

void bessel_pair(double nu, double z, double& J, double& Y) {
  if (nu >= 0.0) {
    J = std::cyl_bessel_j(nu, z);
    Y = std::cyl_neumann(nu, z);
    return;
  }
  const double mu = -nu;
  const double Jm = std::cyl_bessel_j(mu, z);
  const double Ym = std::cyl_neumann(mu, z);
  // J_{-mu} = cos(mu pi) J_mu - sin(mu pi) Y_mu, Y_{-mu} = sin(mu pi) J_mu + cos(mu pi) Y_mu.
  double s = std::sin(mu * pi), c = std::cos(mu * pi);
  if (mu == std::round(mu)) {
    s = 0.0;
    c = std::fmod(mu, 2.0) == 0.0 ? 1.0 : -1.0;
  }
  J = c * Jm - s * Ym;
  Y = s * Jm + c * Ym;
}

double real_param(const CScalar& v, const char* name) {
  if (v.imag() != 0.0) throw std::domain_error(std::string(name) + " must be real for the Bessel integral");
  return v.real();
}

}  // namespace

BesselEval bessel_jy(double nu, double z) {
  if (!std::isfinite(nu) || std::abs(nu) > 50.0)
    throw std::domain_error("bessel_jy: order must satisfy |nu| <= 50");
  if (!(z > 0.0) || !std::isfinite(z)) throw std::domain_error("bessel_jy: argument must be positive");
  BesselEval e;
  e.nu = nu;
  e.z = z;
  bessel_pair(nu, z, e.J, e.Y);
  double Jm, Ym, Jp, Yp;
  bessel_pair(nu - 1.0, z, Jm, Ym);
  bessel_pair(nu + 1.0, z, Jp, Yp);
  e.dJ = 0.5 * (Jm - Jp);
  e.dY = 0.5 * (Ym - Yp);
  return e;
}

double SFunctContext::z(double y) const { return (2.0 / c) * std::sqrt(r * y / (alpha * k)); }

double compute_order(const GauseParams& params) {
  const auto& v = params.values();
  if (params.m() != 1) throw std::invalid_argument("compute_order: requires m = 1");
  if (v.gamma != CScalar(0.0)) throw std::invalid_argument("compute_order: requires gamma = 0");
  if (v.r == CScalar(0.0) || v.alpha == CScalar(0.0) || v.c == CScalar(0.0) || v.k == CScalar(0.0))
    throw std::invalid_argument("compute_order: requires r alpha c k != 0");
  const double r = real_param(v.r, "r"), alpha = real_param(v.alpha, "alpha"),
               c = real_param(v.c, "c"), k = real_param(v.k, "k"), beta = real_param(v.beta, "beta");
  return r * (k + beta) / (alpha * c * k);
}

SFunctContext make_sfunct_context(const GauseParams& params) {
  SFunctContext ctx;
  ctx.nu = compute_order(params);
  const auto& v = params.values();
  ctx.r = v.r.real();
  ctx.alpha = v.alpha.real();
  ctx.c = v.c.real();
  ctx.k = v.k.real();
  ctx.beta = v.beta.real();
  if (ctx.c <= 0.0 || ctx.r / (ctx.alpha * ctx.k) <= 0.0)
    throw std::domain_error("Bessel integral needs c > 0 and r/(alpha k) > 0 for a real argument");
  ctx.a = ctx.r * (ctx.k - ctx.beta) / (2.0 * ctx.alpha * ctx.c * ctx.k);
  return ctx;
}

ABH eval_ABH(const SFunctContext& ctx, double x, double y) {
  if (!(y > 0.0)) throw std::domain_error("eval_ABH: y must be positive");
  const BesselEval b = bessel_jy(ctx.nu, ctx.z(y));
  const double lead = (1.0 / ctx.c) * std::sqrt(ctx.r / (ctx.alpha * ctx.k)) * std::sqrt(y);
  const double shift = ctx.r / (ctx.alpha * ctx.c * ctx.k) * (x - (ctx.k - ctx.beta) / 2.0);
  ABH out;
  out.A = lead * b.dJ - shift * b.J;
  out.B = lead * b.dY - shift * b.Y;
  if (out.B != 0.0) out.H = out.A / out.B;
  return out;
}

double tric_residual(const SFunctContext& ctx, double y) {
  if (!(y > 0.0)) throw std::domain_error("tric_residual: y must be positive");
  const double z = ctx.z(y);
  const BesselEval b = bessel_jy(ctx.nu, z);
  const double a = ctx.a, nu = ctx.nu;
  const double r = ctx.r, al = ctx.alpha, c = ctx.c, k = ctx.k, be = ctx.beta;
  const double b1 = 1.0 - r / (al * c) + r * be / (al * c * k);
  const double c1 = r / (al * c * c * k);
  const double c2 = -be * r * r / (al * al * c * c * k);
  auto residual = [&](double C, double dC) {
    const double ddC = -dC / z - (1.0 - nu * nu / (z * z)) * C;
    const double w = std::pow(y, a) * C;
    const double dw = std::pow(y, a - 1.0) * (a * C + 0.5 * z * dC);
    const double ddw = std::pow(y, a - 2.0) *
                       ((a - 1.0) * (a * C + 0.5 * z * dC) + 0.5 * z * (a * dC + 0.5 * dC + 0.5 * z * ddC));
    return std::abs(ddw + b1 / y * dw + (c1 / y + c2 / (y * y)) * w);
  };
  return std::max(residual(b.J, b.dJ), residual(b.Y, b.dY));
}

double riccati_residual(const GauseParams& params, double x, double y) {
  if (params.m() != 1) throw std::invalid_argument("riccati_residual: requires m = 1");
  const auto& v = params.values();
  if (v.gamma != CScalar(0.0)) throw std::invalid_argument("riccati_residual: requires gamma = 0");
  const CScalar X(x), Y(y);
  const CScalar pi_x = X * (X - v.k) * (X + v.beta);
  const CScalar p = -(v.r / v.k * pi_x + v.alpha * X * Y);
  const CScalar q = v.alpha * v.c * X * Y;
  if (q == CScalar(0.0)) throw std::domain_error("riccati_residual: q = 0 at the point");
  const CScalar rhs = -v.r / (v.alpha * v.c * v.k * Y) * X * X +
                      v.r / (v.alpha * v.c * Y) * (1.0 - v.beta / v.k) * X +
                      v.beta * v.r / (v.alpha * v.c * Y) - 1.0 / v.c;
  return std::abs(p / q - rhs);
}

}  // namespace gause

#include "gause/dynamics.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gause {

namespace {

namespace ode = boost::numeric::odeint;
using State = std::array<double, 2>;

struct RealParams {
  double alpha, r, c, k, gamma, beta;
  int m;
};

RealParams real_params(const GauseParams& params) {
  const auto& v = params.values();
  for (const CScalar* z : {&v.alpha, &v.r, &v.c, &v.k, &v.gamma, &v.beta})
    if (z->imag() != 0.0) throw std::domain_error("trajectory integration requires real parameters");
  if (v.k.real() == 0.0) throw std::invalid_argument("k must be nonzero");
  return {v.alpha.real(), v.r.real(), v.c.real(), v.k.real(), v.gamma.real(), v.beta.real(), params.m()};
}

double xm(double x, int m) {
  double out = 1.0;
  for (int i = 0; i < m; ++i) out *= x;
  return out;
}

std::pair<double, double> eval_rhs(const RealParams& p, SystemForm form, double x, double y) {
  const double xmv = xm(x, p.m);
  if (form == SystemForm::Polynomial) {
    const double pi = x * (x - p.k) * (xmv + p.beta);
    return {-(p.r / p.k * pi + p.alpha * xmv * y), (-p.gamma * p.beta + (p.alpha * p.c - p.gamma) * xmv) * y};
  }
  const double holling = p.alpha * xmv / (p.beta + xmv);
  return {p.r * x * (1.0 - x / p.k) - y * holling, y * (-p.gamma + p.c * holling)};
}

}  // namespace

std::string to_string(SystemForm f) { return f == SystemForm::Original ? "original" : "polynomial"; }

SystemForm parse_system_form(const std::string& s) {
  if (s == "original") return SystemForm::Original;
  if (s == "polynomial") return SystemForm::Polynomial;
  throw std::invalid_argument("unknown system form \"" + s + "\"");
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::TimeEnd: return "time-end";
    case Termination::SingularityGuard: return "singularity-guard";
    case Termination::StepUnderflow: return "step-underflow";
  }
  return "?";
}

Termination parse_termination(const std::string& s) {
  for (auto t : {Termination::TimeEnd, Termination::SingularityGuard, Termination::StepUnderflow})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown termination \"" + s + "\"");
}

std::pair<double, double> rhs(const GauseParams& params, SystemForm form, double x, double y) {
  return eval_rhs(real_params(params), form, x, y);
}

Trajectory integrate(const GauseParams& params, double x0, double y0, double t1, const IntegratorConfig& cfg) {
  const RealParams p = real_params(params);
  if (!std::isfinite(x0) || !std::isfinite(y0) || !std::isfinite(t1))
    throw std::invalid_argument("integrate: nonfinite input");
  if (!(t1 > 0.0)) throw std::invalid_argument("integrate: t1 must be positive");
  if (!(cfg.rtol > 0.0) || !(cfg.atol >= 0.0)) throw std::invalid_argument("integrate: bad tolerances");
  if (cfg.fixed_step && !(*cfg.fixed_step > 0.0)) throw std::invalid_argument("integrate: bad fixed step");
  const bool denominators = cfg.form == SystemForm::Original;
  if (denominators && std::abs(p.beta + xm(x0, p.m)) < cfg.guard)
    throw std::domain_error("integrate: initial point lies on the singular set beta + x^m = 0");

  Trajectory traj;
  traj.config = cfg;
  traj.samples.push_back({0.0, x0, y0});

  auto system = [&](const State& s, State& ds, double) {
    auto [fx, fy] = eval_rhs(p, cfg.form, s[0], s[1]);
    ds = {fx, fy};
  };
  // Returns false and sets the termination when a guard fires at s.
  auto guarded = [&](const State& s) {
    if (!std::isfinite(s[0]) || !std::isfinite(s[1]) || std::abs(s[0]) > cfg.bound ||
        std::abs(s[1]) > cfg.bound) {
      traj.termination = Termination::SingularityGuard;
      traj.detail = "state left the bound";
      return true;
    }
    if (denominators && std::abs(p.beta + xm(s[0], p.m)) < cfg.guard) {
      traj.termination = Termination::SingularityGuard;
      traj.detail = "|beta + x^m| below guard";
      return true;
    }
    return false;
  };
  auto accept = [&](const State& s, double t) {
    if (guarded(s)) {
      if (std::isfinite(s[0]) && std::isfinite(s[1])) traj.samples.push_back({t, s[0], s[1]});
      return false;
    }
    traj.samples.push_back({t, s[0], s[1]});
    return true;
  };

  State s{x0, y0};
  double t = 0.0;
  if (cfg.fixed_step) {
    ode::runge_kutta_dopri5<State> stepper;
    const double h = *cfg.fixed_step;
    const auto n = static_cast<long>(std::ceil(t1 / h - 1e-9));
    for (long i = 1; i <= n; ++i) {
      const double dt = std::min(h, t1 - t);
      stepper.do_step(system, s, t, dt);
      t = i == n ? t1 : t + dt;
      if (!accept(s, t)) return traj;
    }
    traj.termination = Termination::TimeEnd;
    return traj;
  }

  auto stepper = ode::make_controlled(cfg.atol, cfg.rtol, ode::runge_kutta_dopri5<State>());
  double dt = std::min(cfg.initial_dt, t1);
  while (t < t1) {
    dt = std::min(dt, t1 - t);
    const double before = t;
    const auto res = stepper.try_step(system, s, t, dt);
    if (res == ode::fail) {
      if (dt < 1e-14 * std::max(1.0, std::abs(t))) {
        traj.termination = Termination::StepUnderflow;
        traj.detail = "step size underflow at t = " + std::to_string(t);
        return traj;
      }
      continue;
    }
    if (t1 - t < 1e-15 * std::max(1.0, t1)) t = t1;
    if (t <= before) {
      traj.termination = Termination::StepUnderflow;
      traj.detail = "time did not advance";
      return traj;
    }
    if (!accept(s, t)) return traj;
  }
  traj.termination = Termination::TimeEnd;
  return traj;
}

DriftReport first_integral_drift(const Evaluator& H, const Trajectory& traj, double floor) {
  DriftReport out;
  std::optional<CScalar> h0;
  for (const auto& smp : traj.samples) {
    CScalar h;
    try {
      h = H(CScalar(smp.x), CScalar(smp.y));
    } catch (const std::domain_error&) {
      ++out.guard_events;
      continue;
    }
    if (!std::isfinite(h.real()) || !std::isfinite(h.imag())) {
      ++out.guard_events;
      continue;
    }
    ++out.samples;
    if (!h0) {
      h0 = h;
      out.H0 = h;
      continue;
    }
    out.max_relative_drift = std::max(out.max_relative_drift, std::abs(h - *h0) / std::max(std::abs(*h0), floor));
  }
  if (!h0) throw std::domain_error("first_integral_drift: H is undefined on every sample");
  return out;
}

AbelResidual abel_residual(const GauseParams& params, const Trajectory& traj, double a1_shift) {
  const RealParams p = real_params(params);
  AbelResidual out;
  for (const auto& smp : traj.samples) {
    const double x = smp.x, y = smp.y;
    auto [fp, fq] = eval_rhs(p, SystemForm::Polynomial, x, y);
    if (fp == 0.0) continue;
    const double xmv = xm(x, p.m);
    const double b = p.r / p.k * x * (x - p.k) * (xmv + p.beta) + p.alpha * xmv * y;
    const double a1 = p.gamma * p.beta - (p.alpha * p.c - p.gamma) * xmv + a1_shift;
    const double lhs = b * (fq / fp);
    const double res = std::abs(lhs - a1 * y);
    const double scale = std::abs(lhs) + std::abs(a1 * y);
    ++out.samples;
    out.max_abs = std::max(out.max_abs, res);
    if (scale > 0.0) out.max_rel = std::max(out.max_rel, res / scale);
  }
  if (out.samples == 0) throw std::domain_error("abel_residual: p = 0 at every sample");
  return out;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,x,y\n";
  char buf[96];
  for (const auto& s : traj.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.t, s.x, s.y);
    out += buf;
  }
  return out;
}

}  // namespace gause

#include <doctest.h>

#include <array>
#include <boost/numeric/odeint.hpp>

#include "gause/darboux.hpp"
#include "gause/dynamics.hpp"
#include "gause/special.hpp"

using namespace gause;

namespace {

QGauss q(const char* s) { return QGauss(parse_rational(s)); }

GauseParams params(const char* a, const char* r, const char* c, const char* k, const char* g,
                   const char* b, int m) {
  return GauseParams::exact({q(a), q(r), q(c), q(k), q(g), q(b)}, m);
}

GauseParams nparams(double alpha, double r, double c, double k, double gamma, double beta, int m = 1) {
  return GauseParams::numeric({alpha, r, c, k, gamma, beta}, m);
}

}  // namespace

TEST_CASE("integrate: fixed point and invariant axes") {
  const auto p = params("1", "1", "1", "1", "1/4", "1", 1);
  auto tr = integrate(p, 1.0, 0.0, 5.0);
  CHECK(tr.termination == Termination::TimeEnd);
  for (const auto& s : tr.samples) {
    CHECK(std::abs(s.x - 1.0) < 1e-12);
    CHECK(s.y == 0.0);
  }
  tr = integrate(p, 0.3, 0.0, 5.0);
  for (const auto& s : tr.samples) CHECK(s.y == 0.0);
  // Logistic solution x = 1/(1 + (1/x0 - 1) e^-t).
  for (const auto& smp : tr.samples) CHECK(std::abs(smp.x - 1.0 / (1.0 + (1.0 / 0.3 - 1.0) * std::exp(-smp.t))) < 1e-9);
  tr = integrate(params("1", "1", "1", "1", "1/4", "1", 2), 0.0, 0.7, 5.0);
  for (const auto& s : tr.samples) CHECK(std::abs(s.x) < 1e-12);

  for (std::size_t i = 1; i < tr.samples.size(); ++i) CHECK(tr.samples[i].t > tr.samples[i - 1].t);
  CHECK(tr.samples.back().t == 5.0);
}

TEST_CASE("integrate: errors and guards") {
  const auto p = params("1", "1", "1", "1", "1/4", "-1", 1);
  CHECK_THROWS_AS(integrate(p, 1.0, 0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(integrate(p, 0.5, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate(GauseParams::numeric({CScalar(1, 1), 1.0, 1.0, 1.0, 0.25, 1.0}, 1), 0.5, 0.5, 1.0),
                  std::domain_error);
  // x' = x - x^2 from x = -1 reaches -infinity at t = ln 2.
  const auto tr = integrate(params("0", "1", "1", "1", "1/4", "1", 2), -1.0, 0.1, 5.0);
  CHECK(tr.samples.back().t < std::log(2.0));
  CHECK(tr.termination == Termination::SingularityGuard);
  CHECK(parse_termination(to_string(tr.termination)) == tr.termination);
  CHECK(parse_system_form(to_string(SystemForm::Polynomial)) == SystemForm::Polynomial);
}

TEST_CASE("Abel residual along a generic trajectory") {
  const auto p = params("1", "1", "1", "1", "1/4", "1", 1);
  const auto tr = integrate(p, 0.5, 0.5, 5.0);
  CHECK(tr.termination == Termination::TimeEnd);
  const auto res = abel_residual(p, tr);
  CHECK(res.max_rel < 1e-9);
  CHECK(abel_residual(p, tr, 1.0).max_abs > 1e-2);

  const auto axis = integrate(p, 0.5, 0.0, 2.0);
  CHECK(abel_residual(p, axis).max_abs == 0.0);
}

TEST_CASE("drift of closed-form first integrals") {
  // q = 0: y is constant.
  const auto pc = params("1", "1", "1", "1", "1", "0", 1);
  const auto hc = special_first_integral(pc);
  auto tr = integrate(pc, 0.3, 0.9, 3.0);
  CHECK(first_integral_drift(hc.evaluate, tr).max_relative_drift == 0.0);

  const auto pa = params("0", "1", "1", "2", "1/2", "1", 1);
  const auto ha = special_first_integral(pa);
  tr = integrate(pa, 1.0, 1.0, 3.0);
  CHECK(tr.termination == Termination::TimeEnd);
  const auto d = first_integral_drift(ha.evaluate, tr);
  CHECK(d.max_relative_drift < 1e-8);
  CHECK(d.samples == tr.samples.size());

  const auto pb = params("1", "0", "1", "1", "2", "1", 1);
  const auto hb = special_first_integral(pb);
  tr = integrate(pb, 1.5, 0.5, 2.0);
  CHECK(first_integral_drift(hb.evaluate, tr).max_relative_drift < 1e-8);

  CHECK_THROWS_AS(first_integral_drift([](CScalar, CScalar) -> CScalar { throw std::domain_error("x"); }, tr),
                  std::domain_error);
}

TEST_CASE("Bessel quotient is conserved") {
  const auto p = nparams(1, 1, 1, 1, 0, 0);
  const auto ctx = make_sfunct_context(p);
  Evaluator H = [&](CScalar x, CScalar y) {
    const auto v = eval_ABH(ctx, x.real(), y.real());
    if (!v.H) throw std::domain_error("B = 0");
    return CScalar(*v.H);
  };
  IntegratorConfig cfg;
  cfg.form = SystemForm::Polynomial;
  const auto tr = integrate(p, 0.5, 1.0, 2.0, cfg);
  CHECK(tr.termination == Termination::TimeEnd);
  CHECK(first_integral_drift(H, tr).max_relative_drift < 1e-6);

  const auto p2 = nparams(1.3, 0.7, 2.1, 3.0, 0.0, 0.4);
  const auto ctx2 = make_sfunct_context(p2);
  Evaluator H2 = [&](CScalar x, CScalar y) { return CScalar(*eval_ABH(ctx2, x.real(), y.real()).H); };
  const auto tr2 = integrate(p2, 1.0, 0.8, 2.0);
  CHECK(first_integral_drift(H2, tr2).max_relative_drift < 1e-6);
}

TEST_CASE("halving a fixed step reduces the drift at least fourfold") {
  const auto pa = params("0", "1", "1", "2", "1/2", "1", 1);
  const auto ha = special_first_integral(pa);
  double prev = 0.0;
  for (double h : {0.2, 0.1, 0.05}) {
    IntegratorConfig cfg;
    cfg.fixed_step = h;
    const auto tr = integrate(pa, 1.0, 1.0, 3.0, cfg);
    REQUIRE(tr.termination == Termination::TimeEnd);
    const double d = first_integral_drift(ha.evaluate, tr).max_relative_drift;
    CHECK(d > 0.0);
    if (prev > 0.0) CHECK(prev / d >= 4.0);
    prev = d;
  }
}

TEST_CASE("original and polynomial forms trace the same orbit") {
  // dt/dtau = beta + x^m: integrate the polynomial form together with t(tau)
  // and compare against the original form at the matching times.
  const auto p = params("1", "1", "1", "1", "1/4", "1", 2);
  const auto& v = p.values();
  using State = std::array<double, 3>;
  State s{0.5, 0.5, 0.0};
  auto sys = [&](const State& u, State& du, double) {
    auto [fx, fy] = rhs(p, SystemForm::Polynomial, u[0], u[1]);
    du = {fx, fy, v.beta.real() + u[0] * u[0]};
  };
  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(1e-13, 1e-13, ode::runge_kutta_dopri5<State>());
  double worst = 0.0;
  double tau = 0.0;
  for (int i = 1; i <= 8; ++i) {
    ode::integrate_adaptive(stepper, sys, s, tau, tau + 0.5, 1e-3);
    tau += 0.5;
    const auto tr = integrate(p, 0.5, 0.5, s[2], IntegratorConfig{1e-12, 1e-14});
    worst = std::max({worst, std::abs(tr.samples.back().x - s[0]), std::abs(tr.samples.back().y - s[1])});
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("trajectory csv") {
  Trajectory tr;
  tr.samples = {{0.0, 1.0, 2.0}, {0.5, 0.25, -1.0}};
  CHECK(trajectory_csv(tr) == "t,x,y\n0,1,2\n0.5,0.25,-1\n");
}

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gause/model.hpp"

namespace gause {

/// Original: the system with the Holling denominator beta + x^m.
/// Polynomial: the same field multiplied by beta + x^m.
enum class SystemForm { Original, Polynomial };
std::string to_string(SystemForm f);
SystemForm parse_system_form(const std::string& s);

struct IntegratorConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  /// Stop when |x| or |y| exceeds this.
  double bound = 1e6;
  /// Stop when |beta + x^m| drops below this (Original form only).
  double guard = 1e-8;
  double initial_dt = 1e-3;
  SystemForm form = SystemForm::Original;
  /// Constant step size; disables step-size control when set.
  std::optional<double> fixed_step;
  friend bool operator==(const IntegratorConfig&, const IntegratorConfig&) = default;
};

enum class Termination { TimeEnd, SingularityGuard, StepUnderflow };
std::string to_string(Termination t);
Termination parse_termination(const std::string& s);

struct Sample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Trajectory {
  std::vector<Sample> samples;
  IntegratorConfig config;
  Termination termination = Termination::TimeEnd;
  std::string detail;
};

/// Right-hand side of the chosen form at (x, y). Requires real parameters.
std::pair<double, double> rhs(const GauseParams& params, SystemForm form, double x, double y);

/// Integrates from (x0, y0) at t = 0 to t1 > 0 with the Dormand-Prince 5(4)
/// pair. Throws std::domain_error for complex parameters or an initial point
/// with |beta + x0^m| < guard in the Original form, std::invalid_argument
/// for t1 <= 0 or nonfinite input.
Trajectory integrate(const GauseParams& params, double x0, double y0, double t1,
                     const IntegratorConfig& cfg = {});

struct DriftReport {
  CScalar H0;
  double max_relative_drift = 0.0;
  std::size_t samples = 0;
  /// Samples where H was undefined and skipped.
  std::size_t guard_events = 0;
};

using Evaluator = std::function<CScalar(CScalar x, CScalar y)>;

/// max |H(x_i, y_i) - H0| / max(|H0|, floor). An evaluator signals a
/// singular sample by throwing std::domain_error. Throws std::domain_error
/// when every sample is singular.
DriftReport first_integral_drift(const Evaluator& H, const Trajectory& traj, double floor = 1e-12);

struct AbelResidual {
  double max_abs = 0.0;
  /// max_abs relative to |(b0 + b1 y) dy/dx| + |a1 y| at each sample.
  double max_rel = 0.0;
  std::size_t samples = 0;
};

/// |(b0 + b1 y) q/p - (a1 + a1_shift) y| along the samples, with
/// b0 = (r/k) Pi(x), b1 = alpha x^m, a1 = gamma beta - (alpha c - gamma) x^m.
/// Samples with p = 0 are skipped; throws std::domain_error if all are.
AbelResidual abel_residual(const GauseParams& params, const Trajectory& traj, double a1_shift = 0.0);

/// "t,x,y" header and one row per sample at full precision.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace gause

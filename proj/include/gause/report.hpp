#pragma once

#include <map>
#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gause/dynamics.hpp"
#include "gause/model.hpp"

namespace gause {

inline constexpr const char* kToolVersion = "1.0.0";

/// Reads a parameter file: {"alpha", "r", "c", "k", "gamma", "beta", "m"}
/// with scalars given as "p/q" strings (exact), JSON numbers (numeric) or
/// {"re", "im"} objects of either. Any numeric scalar makes the whole set
/// numeric. Throws std::invalid_argument with a descriptive message.
GauseParams parse_params(const std::string& path);
GauseParams parse_params_json(const nlohmann::json& j);

struct AnalysisConfig {
  /// classify | darboux | ifactor | equilibria | special | sfunct | simulate |
  /// abel-check | full
  std::string subcommand;
  std::string params_path;
  std::optional<std::string> out_path;
  /// Trajectory CSV prefix for simulate; one file per initial point.
  std::optional<std::string> csv_path;
  int mmax = 3;
  int nmax = 3;
  int ifactor_nmax = 3;
  int n1max = 3;
  int n2max = 3;
  IntegratorConfig integrator;
  std::vector<std::pair<double, double>> initial_conditions;
  /// Integration horizon; the subcommand default applies when absent.
  std::optional<double> t1;
  std::string format = "both";
};

/// Throws std::invalid_argument for unknown subcommands or bad bounds.
void validate(const AnalysisConfig& cfg);

const std::vector<std::string>& subcommands();

/// A scalar in a report: its exact text when known and its double value.
struct ValueRecord {
  std::string exact;
  double re = 0.0;
  double im = 0.0;
  friend bool operator==(const ValueRecord&, const ValueRecord&) = default;
};

struct ParamsRecord {
  std::string mode;
  int m = 1;
  std::map<std::string, ValueRecord> values;
  friend bool operator==(const ParamsRecord&, const ParamsRecord&) = default;
};

struct ClassRecord {
  std::string primary;
  bool in_A = false;
  bool in_B = false;
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct CertificateRecord {
  std::string f;
  std::string cofactor_P;
  std::string cofactor_Q;
  std::vector<std::string> factors;
  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct DarbouxRecord {
  std::string field;
  int Mmax = 0;
  int nmax = 0;
  std::size_t branches = 0;
  std::size_t consistent_branches = 0;
  std::vector<CertificateRecord> certificates;
  std::string statement;
  friend bool operator==(const DarbouxRecord&, const DarbouxRecord&) = default;
};

struct IFactorRecord {
  int Nmax = 0;
  int n1max = 0;
  int n2max = 0;
  std::size_t branches = 0;
  std::size_t consistent_branches = 0;
  std::vector<std::string> candidates;
  std::optional<std::string> set1_forced_lambda1;
  bool set1_full_consistent = false;
  std::string statement;
  friend bool operator==(const IFactorRecord&, const IFactorRecord&) = default;
};

struct ToleranceRecord {
  double zero = 0.0;
  double cf_tol = 0.0;
  long long cf_max_den = 0;
  double cf_separation = 0.0;
  friend bool operator==(const ToleranceRecord&, const ToleranceRecord&) = default;
};

struct EquilibriumRecord {
  std::string name;
  bool applicable = false;
  std::string reason;
  std::optional<ValueRecord> x;
  std::optional<ValueRecord> y;
  std::optional<ValueRecord> T;
  std::optional<ValueRecord> D;
  std::optional<ValueRecord> t;
  std::optional<std::string> verdict;
  std::optional<std::string> evidence;
  std::optional<std::string> ratio;
  std::optional<ValueRecord> s;
  std::optional<ToleranceRecord> tolerance;
  bool no_local_analytic_first_integral = false;
  double table_mismatch = 0.0;
  std::optional<bool> p1_forms_agree;
  friend bool operator==(const EquilibriumRecord&, const EquilibriumRecord&) = default;
};

struct DriftRecord {
  double x0 = 0.0;
  double y0 = 0.0;
  double t1 = 0.0;
  std::string form;
  std::string termination;
  ValueRecord H0;
  /// max |H - H0| / max(|H0|, drift_floor).
  double max_relative_drift = 0.0;
  double drift_floor = 0.0;
  std::size_t samples = 0;
  std::size_t guard_events = 0;
  double tolerance = 0.0;
  bool passed = false;
  friend bool operator==(const DriftRecord&, const DriftRecord&) = default;
};

struct SpecialRecord {
  std::string tag;
  std::string formula;
  std::map<std::string, std::string> coefficients;
  std::string singular_set;
  std::vector<DriftRecord> drifts;
  friend bool operator==(const SpecialRecord&, const SpecialRecord&) = default;
};

struct TricRecord {
  double y = 0.0;
  double residual = 0.0;
  friend bool operator==(const TricRecord&, const TricRecord&) = default;
};

struct SFunctRecord {
  double nu = 0.0;
  double a = 0.0;
  std::vector<TricRecord> tric;
  double tric_tolerance = 0.0;
  double perturbed_order_residual = 0.0;
  double B_guard = 0.0;
  std::vector<DriftRecord> drifts;
  friend bool operator==(const SFunctRecord&, const SFunctRecord&) = default;
};

struct SimulationRecord {
  double x0 = 0.0;
  double y0 = 0.0;
  double t1 = 0.0;
  std::string form;
  double rtol = 0.0;
  double atol = 0.0;
  std::string termination;
  std::string detail;
  std::size_t samples = 0;
  double t_end = 0.0;
  double x_end = 0.0;
  double y_end = 0.0;
  std::optional<std::string> csv;
  friend bool operator==(const SimulationRecord&, const SimulationRecord&) = default;
};

struct AbelRecord {
  double x0 = 0.0;
  double y0 = 0.0;
  double t1 = 0.0;
  std::size_t samples = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  double perturbed_max_abs = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  friend bool operator==(const AbelRecord&, const AbelRecord&) = default;
};

struct AnalysisReport {
  std::string tool = "gause";
  std::string version = kToolVersion;
  std::string subcommand;
  ParamsRecord params;
  ClassRecord classification;
  std::optional<DarbouxRecord> darboux;
  std::optional<IFactorRecord> ifactor;
  std::vector<EquilibriumRecord> equilibria;
  std::optional<SpecialRecord> special;
  std::optional<SFunctRecord> sfunct;
  std::vector<SimulationRecord> simulations;
  std::vector<AbelRecord> abel;
  /// Results that would contradict the nonintegrability statements.
  std::vector<std::string> findings;
  std::vector<std::string> notes;
  double wall_time_s = 0.0;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);
/// Serialized JSON with two-space indentation.
std::string dump(const AnalysisReport& r);

/// Human-readable summary derived from the JSON form.
std::string render_text(const nlohmann::json& j);

/// Runs the subcommand on already parsed parameters.
AnalysisReport run_analysis(const AnalysisConfig& cfg, const GauseParams& params);
/// Parses cfg.params_path and runs the subcommand.
AnalysisReport run_subcommand(const AnalysisConfig& cfg);

/// 0 on success, 2 when the report carries findings.
int exit_code(const AnalysisReport& r);

}  // namespace gause

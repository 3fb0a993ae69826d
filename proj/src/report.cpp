#include "gause/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gause/darboux.hpp"
#include "gause/equilibria.hpp"
#include "gause/special.hpp"

namespace nlohmann {

template <class T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v)
      j = *v;
    else
      j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null())
      v.reset();
    else
      v = j.get<T>();
  }
};

}  // namespace nlohmann

namespace gause {

using nlohmann::json;

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ValueRecord, exact, re, im)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ParamsRecord, mode, m, values)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClassRecord, primary, in_A, in_B)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CertificateRecord, f, cofactor_P, cofactor_Q, factors)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DarbouxRecord, field, Mmax, nmax, branches, consistent_branches, certificates,
                                   statement)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(IFactorRecord, Nmax, n1max, n2max, branches, consistent_branches, candidates,
                                   set1_forced_lambda1, set1_full_consistent, statement)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ToleranceRecord, zero, cf_tol, cf_max_den, cf_separation)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EquilibriumRecord, name, applicable, reason, x, y, T, D, t, verdict, evidence,
                                   ratio, s, tolerance, no_local_analytic_first_integral, table_mismatch,
                                   p1_forms_agree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DriftRecord, x0, y0, t1, form, termination, H0, max_relative_drift,
                                   drift_floor, samples, guard_events, tolerance, passed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SpecialRecord, tag, formula, coefficients, singular_set, drifts)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TricRecord, y, residual)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SFunctRecord, nu, a, tric, tric_tolerance, perturbed_order_residual, B_guard,
                                   drifts)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SimulationRecord, x0, y0, t1, form, rtol, atol, termination, detail, samples,
                                   t_end, x_end, y_end, csv)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AbelRecord, x0, y0, t1, samples, max_abs, max_rel, perturbed_max_abs,
                                   tolerance, passed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, tool, version, subcommand, params, classification, darboux,
                                   ifactor, equilibria, special, sfunct, simulations, abel, findings, notes,
                                   wall_time_s)

namespace {

constexpr double kSpecialDriftTol = 1e-8;
constexpr double kSFunctDriftTol = 1e-6;
constexpr double kTricTol = 1e-8;
constexpr double kBGuard = 1e-6;
constexpr double kAbelTol = 1e-9;
constexpr double kDriftFloor = 1.0;

const char* const kParamKeys[] = {"alpha", "r", "c", "k", "gamma", "beta"};

struct ParsedScalar {
  std::optional<QGauss> exact;
  CScalar approx;
};

ParsedScalar parse_part(const json& j, const std::string& key) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    try {
      const QGauss q(parse_rational(text));
      return {q, q.to_complex()};
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("parameter \"" + key + "\": malformed rational \"" + text + "\"");
    }
  }
  if (j.is_number()) return {std::nullopt, CScalar(j.get<double>())};
  throw std::invalid_argument("parameter \"" + key + "\" must be a \"p/q\" string, a number or {\"re\", \"im\"}");
}

ParsedScalar parse_scalar(const json& j, const std::string& key) {
  if (!j.is_object()) return parse_part(j, key);
  if (!j.contains("re") || !j.contains("im") || j.size() != 2)
    throw std::invalid_argument("parameter \"" + key + "\": complex values need exactly \"re\" and \"im\"");
  const auto re = parse_part(j.at("re"), key), im = parse_part(j.at("im"), key);
  ParsedScalar out;
  out.approx = CScalar(re.approx.real(), im.approx.real());
  if (re.exact && im.exact) out.exact = QGauss(re.exact->re(), im.exact->re());
  return out;
}

ValueRecord record(const QGauss& q) { return {q.to_string(), q.re().get_d(), q.im().get_d()}; }
ValueRecord record(const CScalar& z) { return {"", z.real(), z.imag()}; }
ValueRecord record(const Value& v) { return v.exact ? record(*v.exact) : record(v.approx); }

ParamsRecord params_record(const GauseParams& p) {
  ParamsRecord out;
  out.mode = p.is_exact() ? "exact" : "numeric";
  out.m = p.m();
  const auto& nv = p.values();
  const CScalar* nums[] = {&nv.alpha, &nv.r, &nv.c, &nv.k, &nv.gamma, &nv.beta};
  for (int i = 0; i < 6; ++i) out.values[kParamKeys[i]] = record(*nums[i]);
  if (p.is_exact()) {
    const auto& ev = p.exact_values();
    const QGauss* ex[] = {&ev.alpha, &ev.r, &ev.c, &ev.k, &ev.gamma, &ev.beta};
    for (int i = 0; i < 6; ++i) out.values[kParamKeys[i]] = record(*ex[i]);
  }
  return out;
}

bool params_real(const GauseParams& p) { return p.is_real(); }

std::vector<std::pair<double, double>> initial_points(const AnalysisConfig& cfg, bool sfunct) {
  if (!cfg.initial_conditions.empty()) return cfg.initial_conditions;
  if (sfunct) return {{0.5, 1.0}, {1.0, 0.5}, {1.5, 1.5}};
  return {{0.5, 0.5}, {1.5, 0.8}, {0.8, 1.6}};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string bounds_text(int a, int b) { return std::to_string(a) + ", " + std::to_string(b); }

// ---------------------------------------------------------------------------

void run_darboux(const GauseParams& params, const AnalysisConfig& cfg, AnalysisReport& rep, bool strict) {
  if (!params.is_exact()) {
    if (strict) throw NumericModeError("darboux: the exact search needs exact (\"p/q\") parameters");
    rep.notes.push_back("darboux search skipped: numeric-mode parameters");
    return;
  }
  PlanarField field;
  std::vector<DarbouxCertificate> certs;
  DarbouxSearchStats stats;
  try {
    field = build_field(params);
    certs = darboux_search(field, cfg.mmax, cfg.nmax, Exec::Parallel, &stats);
  } catch (const std::invalid_argument& e) {
    if (strict) throw;
    rep.notes.push_back(std::string("darboux search skipped: ") + e.what());
    return;
  }
  DarbouxRecord d;
  d.field = to_string(field.kind);
  d.Mmax = cfg.mmax;
  d.nmax = cfg.nmax;
  d.branches = stats.branches;
  d.consistent_branches = stats.consistent_branches;
  std::string names, extra;
  for (const auto& c : certs) {
    CertificateRecord cr;
    cr.f = c.f.to_string();
    cr.cofactor_P = c.cofactor.P.to_string();
    cr.cofactor_Q = c.cofactor.Q.to_string();
    for (const auto& [g, e] : c.irreducible_factors)
      cr.factors.push_back(e == 1 ? g.to_string() : "(" + g.to_string() + ")^" + std::to_string(e));
    if (!(c.f == YPoly::x() || c.f == YPoly::y())) extra += (extra.empty() ? "" : ", ") + cr.f;
    names += (names.empty() ? "" : ", ") + cr.f;
    d.certificates.push_back(std::move(cr));
  }
  d.statement = "Irreducible Darboux polynomials verified up to bounds (Mmax, nmax) = (" +
                bounds_text(cfg.mmax, cfg.nmax) + ") on the " + d.field + " field: {" + names + "}";
  if (classify_params(params).primary == ParamCase::GenericAMinusB && !extra.empty())
    rep.findings.push_back("darboux: irreducible invariant curve other than x and y found within bounds: {" +
                           extra + "}");
  rep.darboux = std::move(d);
}

void run_ifactor(const GauseParams& params, const AnalysisConfig& cfg, AnalysisReport& rep) {
  if (!params.is_exact())
    throw NumericModeError("ifactor: the exact search needs exact (\"p/q\") parameters");
  const IFactorResult r = ifactor_search(params, cfg.ifactor_nmax, cfg.n1max, cfg.n2max);
  IFactorRecord ir;
  ir.Nmax = r.Nmax;
  ir.n1max = r.n1max;
  ir.n2max = r.n2max;
  ir.branches = r.branches.size();
  for (const auto& b : r.branches) ir.consistent_branches += b.consistent;
  for (const auto& c : r.candidates)
    ir.candidates.push_back("x^(" + c.lambda1.to_string() + ") y^(" + c.lambda2.to_string() + ") exp((" +
                            c.g().to_string() + ")/(x^" + std::to_string(c.n1) + " y^" + std::to_string(c.n2) +
                            "))");
  if (r.set1.forced_lambda1) ir.set1_forced_lambda1 = r.set1.forced_lambda1->to_string();
  ir.set1_full_consistent = r.set1.full_consistent;
  const std::string bounds = "(Nmax, n1max, n2max) = (" + std::to_string(r.Nmax) + ", " + std::to_string(r.n1max) +
                             ", " + std::to_string(r.n2max) + ")";
  if (r.candidates.empty()) {
    ir.statement = "Nonintegrability verified up to bounds " + bounds +
                   ": no integrating factor x^l1 y^l2 exp(g/(x^n1 y^n2)) with deg_y g <= N exists within these "
                   "bounds. Only x and y enter the ansatz as invariant curves, and the unbounded statement is not "
                   "machine-checked.";
  } else {
    ir.statement = "Integrating factor candidates found within bounds " + bounds;
    rep.findings.push_back("ifactor: " + std::to_string(r.candidates.size()) +
                           " integrating factor candidate(s) found within bounds " + bounds);
  }
  rep.ifactor = std::move(ir);
}

void run_equilibria(const GauseParams& params, AnalysisReport& rep) {
  const NumericTolerance tol;
  for (const auto& e : analyze_equilibria(params, tol)) {
    EquilibriumRecord er;
    er.name = e.name();
    er.applicable = e.applicable;
    er.reason = e.reason;
    if (e.point) {
      er.x = record(e.point->first);
      er.y = record(e.point->second);
    }
    if (e.T) er.T = record(*e.T);
    if (e.D) er.D = record(*e.D);
    if (e.verdict) {
      const auto& v = *e.verdict;
      er.verdict = to_string(v.verdict);
      er.evidence = v.evidence;
      if (v.t) er.t = record(*v.t);
      if (v.ratio) er.ratio = to_string(*v.ratio);
      if (v.lf) er.s = record(v.lf->s);
      if (v.tolerance)
        er.tolerance = ToleranceRecord{v.tolerance->zero, v.tolerance->cf_tol, v.tolerance->cf_max_den,
                                       v.tolerance->cf_separation};
      er.no_local_analytic_first_integral = v.no_local_analytic_first_integral;
    }
    er.table_mismatch = e.table_mismatch;
    er.p1_forms_agree = e.p1_forms_agree;
    if (e.applicable && e.table_mismatch > 1e-10)
      rep.findings.push_back("equilibria: closed-form trace/determinant disagree with the Jacobian at " + er.name);
    rep.equilibria.push_back(std::move(er));
  }
}

DriftRecord drift_record(const GauseParams& params, const Evaluator& H, double x0, double y0, double t1,
                         const IntegratorConfig& icfg, double tol) {
  const Trajectory tr = integrate(params, x0, y0, t1, icfg);
  // H is defined up to an additive constant, so a start with H0 near 0 would
  // make a purely relative drift meaningless.
  const DriftReport d = first_integral_drift(H, tr, kDriftFloor);
  DriftRecord out;
  out.x0 = x0;
  out.y0 = y0;
  out.t1 = t1;
  out.form = to_string(icfg.form);
  out.termination = to_string(tr.termination);
  out.H0 = record(d.H0);
  out.max_relative_drift = d.max_relative_drift;
  out.drift_floor = kDriftFloor;
  out.samples = d.samples;
  out.guard_events = d.guard_events;
  out.tolerance = tol;
  out.passed = d.max_relative_drift < tol;
  return out;
}

void run_special(const GauseParams& params, const AnalysisConfig& cfg, AnalysisReport& rep) {
  const SpecialIntegral si = special_first_integral(params);
  SpecialRecord sr;
  sr.tag = to_string(si.tag);
  sr.formula = si.formula;
  for (const auto& [name, value] : si.coefficients) sr.coefficients[name] = value.to_string();
  sr.singular_set = si.singular_set;
  if (!params_real(params)) {
    rep.notes.push_back("special: drift check skipped for complex parameters");
  } else {
    const double t1 = cfg.t1.value_or(3.0);
    for (const auto& [x0, y0] : initial_points(cfg, false)) {
      try {
        auto d = drift_record(params, si.evaluate, x0, y0, t1, cfg.integrator, kSpecialDriftTol);
        if (!d.passed)
          rep.findings.push_back("special: drift " + fmt(d.max_relative_drift) + " above " +
                                 fmt(kSpecialDriftTol) + " from (" + fmt(x0) + ", " + fmt(y0) + ")");
        sr.drifts.push_back(std::move(d));
      } catch (const std::domain_error& e) {
        rep.notes.push_back("special: start (" + fmt(x0) + ", " + fmt(y0) + ") skipped: " + e.what());
      }
    }
  }
  rep.special = std::move(sr);
}

void run_sfunct(const GauseParams& params, const AnalysisConfig& cfg, AnalysisReport& rep) {
  const SFunctContext ctx = make_sfunct_context(params);
  SFunctRecord s;
  s.nu = ctx.nu;
  s.a = ctx.a;
  s.tric_tolerance = kTricTol;
  s.B_guard = kBGuard;
  SFunctContext wrong = ctx;
  wrong.nu += 0.5;
  for (double y : {0.5, 1.0, 2.0, 5.0}) {
    const double res = tric_residual(ctx, y);
    s.tric.push_back({y, res});
    if (!(res < kTricTol))
      rep.findings.push_back("sfunct: linear-equation residual " + fmt(res) + " at y = " + fmt(y));
    s.perturbed_order_residual = std::max(s.perturbed_order_residual, tric_residual(wrong, y));
  }
  Evaluator H = [&ctx](CScalar x, CScalar y) {
    const ABH v = eval_ABH(ctx, x.real(), y.real());
    if (std::abs(v.B) < kBGuard) throw std::domain_error("|B| below guard");
    return CScalar(v.A / v.B);
  };
  IntegratorConfig icfg = cfg.integrator;
  icfg.form = SystemForm::Polynomial;
  const double t1 = cfg.t1.value_or(2.0);
  for (const auto& [x0, y0] : initial_points(cfg, true)) {
    try {
      auto d = drift_record(params, H, x0, y0, t1, icfg, kSFunctDriftTol);
      if (!d.passed)
        rep.findings.push_back("sfunct: drift " + fmt(d.max_relative_drift) + " above " + fmt(kSFunctDriftTol) +
                               " from (" + fmt(x0) + ", " + fmt(y0) + ")");
      s.drifts.push_back(std::move(d));
    } catch (const std::domain_error& e) {
      rep.notes.push_back("sfunct: start (" + fmt(x0) + ", " + fmt(y0) + ") skipped: " + e.what());
    }
  }
  rep.notes.push_back("sfunct: trajectories integrate the polynomial form, which has the same orbits");
  rep.sfunct = std::move(s);
}

std::string csv_name(const std::string& base, std::size_t i, std::size_t n) {
  if (n == 1) return base;
  const auto dot = base.find_last_of('.');
  const auto slash = base.find_last_of('/');
  const std::string suffix = "_" + std::to_string(i);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return base + suffix;
  return base.substr(0, dot) + suffix + base.substr(dot);
}

void run_simulate(const GauseParams& params, const AnalysisConfig& cfg, AnalysisReport& rep) {
  const auto points = initial_points(cfg, false);
  const double t1 = cfg.t1.value_or(5.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [x0, y0] = points[i];
    const Trajectory tr = integrate(params, x0, y0, t1, cfg.integrator);
    SimulationRecord s;
    s.x0 = x0;
    s.y0 = y0;
    s.t1 = t1;
    s.form = to_string(cfg.integrator.form);
    s.rtol = cfg.integrator.rtol;
    s.atol = cfg.integrator.atol;
    s.termination = to_string(tr.termination);
    s.detail = tr.detail;
    s.samples = tr.samples.size();
    s.t_end = tr.samples.back().t;
    s.x_end = tr.samples.back().x;
    s.y_end = tr.samples.back().y;
    if (cfg.csv_path) {
      const std::string path = csv_name(*cfg.csv_path, i, points.size());
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write trajectory file " + path);
      out << trajectory_csv(tr);
      s.csv = path;
    }
    rep.simulations.push_back(std::move(s));
  }
}

void run_abel(const GauseParams& params, const AnalysisConfig& cfg, AnalysisReport& rep) {
  const double t1 = cfg.t1.value_or(5.0);
  for (const auto& [x0, y0] : initial_points(cfg, false)) {
    try {
      const Trajectory tr = integrate(params, x0, y0, t1, cfg.integrator);
      const AbelResidual res = abel_residual(params, tr);
      AbelRecord a;
      a.x0 = x0;
      a.y0 = y0;
      a.t1 = t1;
      a.samples = res.samples;
      a.max_abs = res.max_abs;
      a.max_rel = res.max_rel;
      a.perturbed_max_abs = abel_residual(params, tr, 1.0).max_abs;
      a.tolerance = kAbelTol;
      a.passed = res.max_rel < kAbelTol;
      if (!a.passed)
        rep.findings.push_back("abel-check: relative residual " + fmt(res.max_rel) + " above " + fmt(kAbelTol));
      rep.abel.push_back(a);
    } catch (const std::domain_error& e) {
      rep.notes.push_back("abel-check: start (" + fmt(x0) + ", " + fmt(y0) + ") skipped: " + e.what());
    }
  }
}

bool sfunct_applicable(const GauseParams& params) {
  try {
    make_sfunct_context(params);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

GauseParams parse_params_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("parameter file must hold a JSON object");
  for (const auto& [key, _] : j.items()) {
    const bool known = key == "m" || std::find(std::begin(kParamKeys), std::end(kParamKeys), key) != std::end(kParamKeys);
    if (!known) throw std::invalid_argument("unknown parameter \"" + key + "\"");
  }
  std::vector<ParsedScalar> vals;
  for (const char* key : kParamKeys) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing parameter \"") + key + "\"");
    vals.push_back(parse_scalar(j.at(key), key));
  }
  if (!j.contains("m")) throw std::invalid_argument("missing parameter \"m\"");
  const json& jm = j.at("m");
  if (!jm.is_number_integer()) throw std::invalid_argument("m must be an integer");
  const long long m = jm.get<long long>();
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (m > 64) throw std::invalid_argument("m must be at most 64");
  if (vals[3].approx == CScalar(0.0)) throw std::invalid_argument("k must be nonzero");

  const bool exact = std::all_of(vals.begin(), vals.end(), [](const ParsedScalar& s) { return s.exact.has_value(); });
  if (exact)
    return GauseParams::exact({*vals[0].exact, *vals[1].exact, *vals[2].exact, *vals[3].exact, *vals[4].exact,
                               *vals[5].exact},
                              static_cast<int>(m));
  return GauseParams::numeric(
      {vals[0].approx, vals[1].approx, vals[2].approx, vals[3].approx, vals[4].approx, vals[5].approx},
      static_cast<int>(m));
}

GauseParams parse_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("parameter file " + path + " is not valid JSON: " + e.what());
  }
  return parse_params_json(j);
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"classify", "darboux",  "ifactor",    "equilibria", "special",
                                                 "sfunct",   "simulate", "abel-check", "full"};
  return names;
}

void validate(const AnalysisConfig& cfg) {
  const auto& names = subcommands();
  if (std::find(names.begin(), names.end(), cfg.subcommand) == names.end())
    throw std::invalid_argument("unknown subcommand \"" + cfg.subcommand + "\"");
  for (int b : {cfg.mmax, cfg.nmax, cfg.ifactor_nmax, cfg.n1max, cfg.n2max})
    if (b < 1 || b > 12) throw std::invalid_argument("search bounds must lie in [1, 12]");
  if (!(cfg.integrator.rtol > 0.0) || !(cfg.integrator.atol >= 0.0))
    throw std::invalid_argument("tolerances must be positive");
  if (cfg.t1 && !(*cfg.t1 > 0.0)) throw std::invalid_argument("t1 must be positive");
  if (cfg.format != "json" && cfg.format != "text" && cfg.format != "both")
    throw std::invalid_argument("format must be json, text or both");
}

AnalysisReport run_analysis(const AnalysisConfig& cfg, const GauseParams& params) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.subcommand = cfg.subcommand;
  rep.params = params_record(params);
  const ParamClass pc = classify_params(params);
  rep.classification = {to_string(pc.primary), pc.in_A, pc.in_B};
  const bool generic = pc.primary == ParamCase::GenericAMinusB;
  const std::string& sub = cfg.subcommand;

  if (sub == "darboux") run_darboux(params, cfg, rep, true);
  if (sub == "ifactor") run_ifactor(params, cfg, rep);
  if (sub == "equilibria") run_equilibria(params, rep);
  if (sub == "special") run_special(params, cfg, rep);
  if (sub == "sfunct") run_sfunct(params, cfg, rep);
  if (sub == "simulate") run_simulate(params, cfg, rep);
  if (sub == "abel-check") run_abel(params, cfg, rep);
  if (sub == "full") {
    run_darboux(params, cfg, rep, false);
    if (generic && params.is_exact())
      run_ifactor(params, cfg, rep);
    else if (generic)
      rep.notes.push_back("ifactor search skipped: numeric-mode parameters");
    else
      rep.notes.push_back("ifactor search skipped: parameters are " + rep.classification.primary +
                          ", which has a closed-form first integral");
    run_equilibria(params, rep);
    if (!generic) run_special(params, cfg, rep);
    if (sfunct_applicable(params)) run_sfunct(params, cfg, rep);
    if (params_real(params))
      run_abel(params, cfg, rep);
    else
      rep.notes.push_back("abel-check skipped: complex parameters");
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

AnalysisReport run_subcommand(const AnalysisConfig& cfg) {
  validate(cfg);
  return run_analysis(cfg, parse_params(cfg.params_path));
}

int exit_code(const AnalysisReport& r) { return r.findings.empty() ? 0 : 2; }

json to_json(const AnalysisReport& r) {
  json j;
  nlohmann::to_json(j, r);
  return j;
}

AnalysisReport report_from_json(const json& j) { return j.get<AnalysisReport>(); }

std::string dump(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

// ---------------------------------------------------------------------------

namespace {

std::string value_text(const json& v) {
  if (v.is_null()) return "-";
  if (!v.at("exact").get<std::string>().empty()) return v.at("exact").get<std::string>();
  const double re = v.at("re").get<double>(), im = v.at("im").get<double>();
  if (im == 0.0) return fmt(re);
  return fmt(re) + (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

void drift_lines(std::ostringstream& os, const json& drifts) {
  for (const auto& d : drifts)
    os << "  start (" << fmt(d.at("x0").get<double>()) << ", " << fmt(d.at("y0").get<double>()) << "), t1 = "
       << fmt(d.at("t1").get<double>()) << ": drift " << fmt(d.at("max_relative_drift").get<double>())
       << " (tolerance " << fmt(d.at("tolerance").get<double>()) << ", " << d.at("samples").get<std::size_t>()
       << " samples, " << (d.at("passed").get<bool>() ? "pass" : "FAIL") << ")\n";
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  os << j.at("tool").get<std::string>() << " " << j.at("version").get<std::string>() << ": "
     << j.at("subcommand").get<std::string>() << "\n";
  const auto& p = j.at("params");
  os << "parameters (" << p.at("mode").get<std::string>() << ", m = " << p.at("m").get<int>() << "):";
  for (const char* key : kParamKeys) os << " " << key << "=" << value_text(p.at("values").at(key));
  os << "\n";
  os << "classification: " << j.at("classification").at("primary").get<std::string>() << "\n";

  if (!j.at("darboux").is_null()) {
    const auto& d = j.at("darboux");
    os << "darboux: " << d.at("statement").get<std::string>() << "\n";
    for (const auto& c : d.at("certificates"))
      os << "  " << c.at("f").get<std::string>() << "  cofactor " << c.at("cofactor_P").get<std::string>()
         << " + (" << c.at("cofactor_Q").get<std::string>() << ") y\n";
  }
  if (!j.at("ifactor").is_null()) {
    const auto& f = j.at("ifactor");
    os << "ifactor: " << f.at("statement").get<std::string>() << "\n";
    os << "  branches " << f.at("branches").get<std::size_t>() << ", consistent "
       << f.at("consistent_branches").get<std::size_t>();
    if (!f.at("set1_forced_lambda1").is_null())
      os << "; lowest branch forces lambda1 = " << f.at("set1_forced_lambda1").get<std::string>()
         << " and is " << (f.at("set1_full_consistent").get<bool>() ? "consistent" : "inconsistent");
    os << "\n";
    for (const auto& c : f.at("candidates")) os << "  candidate " << c.get<std::string>() << "\n";
  }
  if (!j.at("equilibria").empty()) {
    os << "equilibria:\n";
    for (const auto& e : j.at("equilibria")) {
      os << "  " << e.at("name").get<std::string>();
      if (!e.at("x").is_null()) os << " (" << value_text(e.at("x")) << ", " << value_text(e.at("y")) << ")";
      if (!e.at("applicable").get<bool>()) {
        os << ": not applicable, " << e.at("reason").get<std::string>() << "\n";
        continue;
      }
      os << ": T = " << value_text(e.at("T")) << ", D = " << value_text(e.at("D"));
      if (!e.at("t").is_null()) os << ", t = " << value_text(e.at("t"));
      os << ", " << e.at("verdict").get<std::string>();
      if (!e.at("ratio").is_null()) os << " (ratio " << e.at("ratio").get<std::string>() << ")";
      os << "\n    " << e.at("evidence").get<std::string>() << "\n";
      if (!e.at("tolerance").is_null())
        os << "    numeric verdict: zero tolerance " << fmt(e.at("tolerance").at("zero").get<double>())
           << ", continued fractions to denominator " << e.at("tolerance").at("cf_max_den").get<long long>()
           << " within " << fmt(e.at("tolerance").at("cf_tol").get<double>()) << "\n";
    }
  }
  if (!j.at("special").is_null()) {
    const auto& s = j.at("special");
    os << "special (" << s.at("tag").get<std::string>() << "): " << s.at("formula").get<std::string>()
       << ", singular set " << s.at("singular_set").get<std::string>() << "\n";
    drift_lines(os, s.at("drifts"));
  }
  if (!j.at("sfunct").is_null()) {
    const auto& s = j.at("sfunct");
    double worst = 0.0;
    for (const auto& t : s.at("tric")) worst = std::max(worst, t.at("residual").get<double>());
    os << "sfunct: nu = " << fmt(s.at("nu").get<double>()) << ", a = " << fmt(s.at("a").get<double>())
       << ", linear-equation residual " << fmt(worst) << " (order + 1/2 gives "
       << fmt(s.at("perturbed_order_residual").get<double>()) << ")\n";
    drift_lines(os, s.at("drifts"));
  }
  for (const auto& s : j.at("simulations")) {
    os << "simulate: start (" << fmt(s.at("x0").get<double>()) << ", " << fmt(s.at("y0").get<double>())
       << ") -> t = " << fmt(s.at("t_end").get<double>()) << " (" << fmt(s.at("x_end").get<double>()) << ", "
       << fmt(s.at("y_end").get<double>()) << "), " << s.at("termination").get<std::string>() << ", "
       << s.at("samples").get<std::size_t>() << " samples";
    if (!s.at("csv").is_null()) os << ", written to " << s.at("csv").get<std::string>();
    os << "\n";
  }
  for (const auto& a : j.at("abel"))
    os << "abel-check: start (" << fmt(a.at("x0").get<double>()) << ", " << fmt(a.at("y0").get<double>())
       << "): relative residual " << fmt(a.at("max_rel").get<double>()) << ", perturbed control "
       << fmt(a.at("perturbed_max_abs").get<double>()) << " (" << (a.at("passed").get<bool>() ? "pass" : "FAIL")
       << ")\n";
  const auto& findings = j.at("findings");
  if (findings.empty())
    os << "findings: none\n";
  else
    for (const auto& f : findings) os << "FINDING: " << f.get<std::string>() << "\n";
  for (const auto& n : j.at("notes")) os << "note: " << n.get<std::string>() << "\n";
  return os.str();
}

}  // namespace gause

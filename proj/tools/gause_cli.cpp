// Command-line entry point: gause <subcommand> --params FILE [options]

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gause/report.hpp"

namespace {

int usage_error(const std::string& what) {
  std::cerr << "gause: " << what << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  gause::AnalysisConfig cfg;
  std::vector<double> x0s, y0s;
  std::optional<double> t1;
  std::optional<std::string> out, csv;
  std::string form = "original";

  CLI::App app{"Integrability analysis of the generalized Gause predator-prey system", "gause"};
  app.set_version_flag("--version", gause::kToolVersion);
  app.add_option("subcommand", cfg.subcommand, "classify | darboux | ifactor | equilibria | special | sfunct | "
                                               "simulate | abel-check | full")
      ->required()
      ->check(CLI::IsMember(gause::subcommands()));
  app.add_option("--params", cfg.params_path, "Parameter JSON file")->required();
  app.add_option("--out", out, "Write the JSON report to this file");
  app.add_option("--format", cfg.format, "Standard output format")
      ->check(CLI::IsMember({"json", "text", "both"}))
      ->capture_default_str();
  app.add_option("--mmax", cfg.mmax, "Darboux search: maximal y-degree")->capture_default_str();
  app.add_option("--nmax", cfg.nmax, "Darboux search: maximal root-factor multiplicity")->capture_default_str();
  app.add_option("--ifactor-nmax", cfg.ifactor_nmax, "Integrating-factor search: maximal y-degree of g")
      ->capture_default_str();
  app.add_option("--n1max", cfg.n1max, "Integrating-factor search: maximal x exponent of h")->capture_default_str();
  app.add_option("--n2max", cfg.n2max, "Integrating-factor search: maximal y exponent of h")->capture_default_str();
  app.add_option("--rtol", cfg.integrator.rtol, "Integrator relative tolerance")->capture_default_str();
  app.add_option("--atol", cfg.integrator.atol, "Integrator absolute tolerance")->capture_default_str();
  app.add_option("--x0", x0s, "Initial prey density (repeatable, paired with --y0)");
  app.add_option("--y0", y0s, "Initial predator density (repeatable, paired with --x0)");
  app.add_option("--t1", t1, "Integration horizon");
  app.add_option("--form", form, "Integrated system form")
      ->check(CLI::IsMember({"original", "polynomial"}))
      ->capture_default_str();
  app.add_option("--csv", csv, "Trajectory CSV path for simulate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (x0s.size() != y0s.size()) return usage_error("--x0 and --y0 must be given the same number of times");
  for (std::size_t i = 0; i < x0s.size(); ++i) cfg.initial_conditions.emplace_back(x0s[i], y0s[i]);
  cfg.t1 = t1;
  cfg.out_path = out;
  cfg.csv_path = csv;

  gause::AnalysisReport report;
  try {
    cfg.integrator.form = gause::parse_system_form(form);
    report = gause::run_subcommand(cfg);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  const std::string json_text = gause::dump(report);
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path);
    if (!file || !(file << json_text)) return usage_error("cannot write report to " + *cfg.out_path);
  }
  if (cfg.format != "text") std::cout << json_text;
  if (cfg.format != "json") std::cout << gause::render_text(gause::to_json(report));
  return gause::exit_code(report);
}

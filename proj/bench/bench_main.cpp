// Serial reference loops vs the OpenMP kernels on the exact searches.

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <omp.h>

#include "gause/darboux.hpp"

using namespace gause;

namespace {

double best_of(int repeats, const std::function<void()>& run) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    run();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

GauseParams fixture(int m) {
  auto q = [](long a, long b = 1) { return QGauss(Rational(a, b)); };
  return GauseParams::exact({q(1), q(1), q(1), q(1), q(1, 4), q(1)}, m);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel benchmark"};
  int repeats = 3;
  int bound = 3;
  app.add_option("--repeats", repeats, "Runs per kernel; the best time is reported")->capture_default_str();
  app.add_option("--bound", bound, "Search bound for Mmax, nmax, Nmax, n1max, n2max")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  struct Row {
    std::string name;
    std::function<std::size_t(Exec)> run;
  };
  const PlanarField v1 = build_field(fixture(1));
  const PlanarField v1m2 = build_field(fixture(2));
  const std::vector<QGauss> coeffs{QGauss(-1), QGauss(0), QGauss(1), QGauss(2)};
  const std::vector<Row> rows = {
      {"darboux_search m=1", [&](Exec e) { return darboux_search(v1, bound, bound, e).size(); }},
      {"darboux_search m=2", [&](Exec e) { return darboux_search(v1m2, bound, bound, e).size(); }},
      {"ifactor_search m=1", [&](Exec e) { return ifactor_search(fixture(1), bound, bound, bound, e).branches.size(); }},
      {"ifactor_search m=2", [&](Exec e) { return ifactor_search(fixture(2), bound, bound, bound, e).branches.size(); }},
      {"enumerate_darboux 4^9", [&](Exec e) { return enumerate_darboux(v1, 2, 2, coeffs, e).size(); }},
  };

  std::cout << "threads: " << omp_get_max_threads() << ", best of " << repeats << "\n";
  std::cout << std::left << std::setw(24) << "kernel" << std::right << std::setw(12) << "serial s" << std::setw(12)
            << "parallel s" << std::setw(10) << "speedup" << std::setw(10) << "agree" << "\n";
  for (const auto& row : rows) {
    std::size_t serial_out = 0, parallel_out = 0;
    const double ts = best_of(repeats, [&] { serial_out = row.run(Exec::Serial); });
    const double tp = best_of(repeats, [&] { parallel_out = row.run(Exec::Parallel); });
    std::cout << std::left << std::setw(24) << row.name << std::right << std::fixed << std::setprecision(4)
              << std::setw(12) << ts << std::setw(12) << tp << std::setprecision(2) << std::setw(10) << ts / tp
              << std::setw(10) << (serial_out == parallel_out ? "yes" : "NO") << "\n";
  }
}

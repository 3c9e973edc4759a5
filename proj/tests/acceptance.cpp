// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "pweyl/checks.hpp"
#include "pweyl/counting.hpp"
#include "pweyl/energy.hpp"
#include "pweyl/exact.hpp"
#include "pweyl/fd.hpp"
#include "pweyl/sweeps.hpp"
#include "pweyl/variational.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace pweyl;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExponents[] = {1.5, 2.0, 3.0, 4.0};

// Tolerances and limits.
constexpr double kShootingTolerance = 1e-6;
constexpr double kShootingSeconds = 120.0;
constexpr double kWeyl1dTolerance = 0.005;
constexpr double kSquareTolerance = 0.02;
constexpr double kSquareSeconds = 60.0;
constexpr double kConstant1dTolerance = 0.005;
constexpr double kConstantSquareTolerance = 0.02;
constexpr double kSandwichTolerance = 0.03;
constexpr double kFdFirstTolerance = 0.005;
constexpr double kFdTrustedTolerance = 0.02;
constexpr double kOrderLo = 1.8;
constexpr double kOrderHi = 2.2;
constexpr double kVariationalP2Tolerance = 1e-6;
constexpr double kVariationalP3Tolerance = 0.01;

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double relative_error(double x, double reference) { return std::abs(x - reference) / std::abs(reference); }

/// λ_k = (p-1)(kπ_p/L)^p, used to place windows by eigenvalue index.
double closed_form_1d(double p, double length, double k) { return (p - 1) * std::pow(k * pi_p(p) / length, p); }

Outcome exact_vs_shooting() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double p : kExponents) {
    for (double length : {1.0, 2.0}) {
      const double top = closed_form_1d(p, length, 20.5);
      const std::vector<double> closed = spectrum_1d(p, length, BoundaryCondition::dirichlet, top).expanded();
      if (closed.size() != 20) o.pass = false;
      for (std::size_t k = 1; k <= closed.size(); ++k) {
        worst = std::max(worst, relative_error(closed[k - 1], shooting_eigenvalue_1d(p, length, k)));
      }
    }
  }
  const double elapsed = seconds_since(t0);
  o.pass = o.pass && worst <= kShootingTolerance && elapsed <= kShootingSeconds;
  o.detail << "worst rel err " << worst << " (tol " << kShootingTolerance << ") over 160 eigenvalues, " << elapsed
           << " s (limit " << kShootingSeconds << " s)";
  return o;
}

Outcome weyl_1d() {
  Outcome o;
  const auto grid = log_grid(1e6, 1e8);
  for (double p : kExponents) {
    const Spectrum s = spectrum_1d(p, 1.0, BoundaryCondition::dirichlet, 1e8);
    const WeylEstimate e = estimate_weyl_constant(counting_curve(s, grid));
    const double target = weyl_constant_1d(p);
    const double err = (e.c_hat - target) / target;
    const bool ok = std::abs(err) <= kWeyl1dTolerance;
    o.pass = o.pass && ok;
    o.detail << "p=" << p << ": c_hat " << e.c_hat << " vs " << target << " (" << err * 100 << "%"
             << (ok ? "" : " OUT") << ") ";
  }
  o.detail << "tol " << kWeyl1dTolerance * 100 << "%";
  return o;
}

Outcome weyl_square_and_torus() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto grid = log_grid(1e5, 1e6);
  const double target = 1.0 / (4 * kPi);
  const WeylEstimate sq =
      estimate_weyl_constant(counting_curve(box_spectrum_p2({1.0, 1.0}, BoundaryCondition::dirichlet, 1e6), grid));
  const WeylEstimate torus = estimate_weyl_constant(counting_curve(torus_spectrum_p2({1.0, 1.0}, 1e6), grid));
  const double elapsed = seconds_since(t0);
  const double e1 = relative_error(sq.c_hat, target);
  const double e2 = relative_error(torus.c_hat, target);
  o.pass = e1 <= kSquareTolerance && e2 <= kSquareTolerance && elapsed <= kSquareSeconds;
  o.detail << "square c_hat " << sq.c_hat << " (" << e1 * 100 << "%), torus c_hat " << torus.c_hat << " ("
           << e2 * 100 << "%) vs " << target << ", tol " << kSquareTolerance * 100 << "%, " << elapsed << " s";
  return o;
}

void add_sweep(Outcome& o, const SweepSummary& s) {
  o.pass = o.pass && s.pass() && s.instances > 0;
  o.detail << s.statement << ": " << s.instances << " instances, " << s.violations << " violations; ";
}

Outcome ddm() {
  Outcome o;
  add_sweep(o, sweep_ddm_boxes(100, kSeed));
  add_sweep(o, sweep_ddm_intervals(100, kSeed));
  return o;
}

Outcome ndm() {
  Outcome o;
  add_sweep(o, sweep_ndm_intervals(100, kSeed));
  add_sweep(o, sweep_ndm_cubes({2, 3, 4}));
  return o;
}

Outcome scaling() {
  Outcome o;
  add_sweep(o, sweep_scaling(50, kSeed));
  return o;
}

Outcome cutoff() {
  Outcome o;
  add_sweep(o, sweep_cutoff(1000, kSeed));
  return o;
}

Outcome constant_equality() {
  Outcome o;
  for (double p : kExponents) {
    // window by eigenvalue index: λ_2000 / 100 up to λ_2000
    const double top = closed_form_1d(p, 1.0, 2000);
    const auto grid = log_grid(top / 100, top);
    const auto d = estimate_weyl_constant(counting_curve(spectrum_1d(p, 1.0, BoundaryCondition::dirichlet, top), grid));
    const auto n = estimate_weyl_constant(counting_curve(spectrum_1d(p, 1.0, BoundaryCondition::neumann, top), grid));
    const ConstantComparison c = check_constant_equality(d, n, kConstant1dTolerance);
    o.pass = o.pass && c.pass;
    o.detail << "1D p=" << p << " gap " << c.relative_gap * 100 << "%; ";
  }
  const auto grid = log_grid(1e5, 1e6);
  const auto d =
      estimate_weyl_constant(counting_curve(box_spectrum_p2({1.0, 1.0}, BoundaryCondition::dirichlet, 1e6), grid));
  const auto n =
      estimate_weyl_constant(counting_curve(box_spectrum_p2({1.0, 1.0}, BoundaryCondition::neumann, 1e6), grid));
  const ConstantComparison c = check_constant_equality(d, n, kConstantSquareTolerance);
  o.pass = o.pass && c.pass;
  o.detail << "square gap " << c.relative_gap * 100 << "% (tol " << kConstant1dTolerance * 100 << "% / "
           << kConstantSquareTolerance * 100 << "%)";
  return o;
}

Outcome sandwich() {
  Outcome o;
  const Domain l = Domain::box_union({Box{{0, 0}, {2, 1}}, Box{{0, 1}, {1, 1}}});
  const SandwichResult r = sandwich_weyl(l, log_grid(1.0, 1e6));
  const double target = 3.0 / (4 * kPi);
  const double lower = r.lower.normalized.back();
  const double upper = r.upper.normalized.back();
  const double el = relative_error(lower, target);
  const double eu = relative_error(upper, target);
  o.pass = el <= kSandwichTolerance && eu <= kSandwichTolerance && r.ordering.pass;
  o.detail << "at 1e6 lower f " << lower << " (" << el * 100 << "%), upper f " << upper << " (" << eu * 100
           << "%) vs " << target << ", tol " << kSandwichTolerance * 100 << "%; ordering violations "
           << r.ordering.violations << " of " << r.ordering.lambdas.size();
  return o;
}

double square_fd_lambda1(int cells) {
  const auto op = assemble_fd(rasterize(Domain::unit_cube(2), Rational(1, cells)), BoundaryCondition::dirichlet);
  return eigensolve_p2(op).eigenvalues.front().value;
}

Outcome fd_fidelity() {
  Outcome o;
  const double exact1 = 2 * kPi * kPi;
  const auto op = assemble_fd(rasterize(Domain::unit_cube(2), Rational(1, 64)), BoundaryCondition::dirichlet);
  const std::vector<double> discrete = eigensolve_p2(op).expanded();
  const double first_err = relative_error(discrete.front(), exact1);

  const std::vector<double> exact = box_spectrum_p2({1.0, 1.0}, BoundaryCondition::dirichlet, 1000.0).expanded();
  const double cut = trusted_count_threshold(op, kFdTrustedTolerance);
  std::size_t trusted = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 20 && i < exact.size(); ++i) {
    if (discrete[i] >= cut) continue;
    ++trusted;
    worst = std::max(worst, relative_error(discrete[i], exact[i]));
  }

  const double e16 = std::abs(square_fd_lambda1(16) - exact1);
  const double e32 = std::abs(square_fd_lambda1(32) - exact1);
  const double e64 = std::abs(discrete.front() - exact1);
  const double order1 = std::log2(e16 / e32);
  const double order2 = std::log2(e32 / e64);
  const bool orders_ok = order1 >= kOrderLo && order1 <= kOrderHi && order2 >= kOrderLo && order2 <= kOrderHi;

  o.pass = first_err <= kFdFirstTolerance && trusted > 0 && worst <= kFdTrustedTolerance && orders_ok;
  o.detail << "h=1/64 lambda1 " << discrete.front() << " (" << first_err * 100 << "%, tol "
           << kFdFirstTolerance * 100 << "%); " << trusted << " of first 20 below trusted threshold " << cut
           << ", worst " << worst * 100 << "% (tol " << kFdTrustedTolerance * 100 << "%); orders " << order1 << ", "
           << order2 << " in [" << kOrderLo << ", " << kOrderHi << "]";
  return o;
}

Outcome variational() {
  Outcome o;
  const auto op = assemble_fd(rasterize(Domain::unit_cube(2), Rational(1, 64)), BoundaryCondition::dirichlet);
  const double reference = eigensolve_p2(op).eigenvalues.front().value;
  const VariationalResult r2 = min_p_rayleigh(op.space, 2.0);
  const double e2 = relative_error(r2.lambda, reference);

  const auto interval = GridSpace::from_domain(Domain::interval(0.0, 1.0), 1.0 / 128, BoundaryCondition::dirichlet);
  const VariationalResult r3 = min_p_rayleigh(interval, 3.0);
  const double shoot = shooting_eigenvalue_1d(3.0, 1.0, 1);
  const double e3 = relative_error(r3.lambda, shoot);

  o.pass = e2 <= kVariationalP2Tolerance && e3 <= kVariationalP3Tolerance && r2.monotone && r3.monotone;
  o.detail << "p=2 square h=1/64: " << r2.lambda << " vs eigensolve " << reference << " (rel " << e2 << ", tol "
           << kVariationalP2Tolerance << "); p=3 interval h=1/128: " << r3.lambda << " vs shooting " << shoot
           << " (" << e3 * 100 << "%, tol " << kVariationalP3Tolerance * 100 << "%); monotone "
           << (r2.monotone && r3.monotone ? "yes" : "no");
  return o;
}

Outcome energy_split() {
  Outcome o;
  for (double p : kExponents) {
    const SweepSummary a = sweep_energy_split_disjoint(1000, kSeed, p);
    const SweepSummary b = sweep_energy_split_restrict(1000, kSeed, p);
    const SweepSummary g = sweep_gradient_consistency(1000, kSeed, p);
    o.pass = o.pass && a.pass() && b.pass() && g.pass();
    o.detail << "p=" << p << ": " << a.violations + b.violations << " split violations, gradient worst rel err "
             << 1e-6 - g.worst_margin << "; ";
  }
  o.detail << "1000 instances each, gradient tol 1e-6";
  return o;
}

Outcome friedlander() {
  Outcome o;
  std::vector<std::pair<std::string, CountingCurve>> curves;
  for (double p : kExponents) {
    for (BoundaryCondition bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
      std::ostringstream name;
      name << "1D p=" << p << " " << to_string(bc);
      curves.emplace_back(name.str(), counting_curve(spectrum_1d(p, 1.0, bc, 1e8), log_grid(1.0, 1e8)));
    }
  }
  const auto grid = log_grid(1.0, 1e6);
  for (BoundaryCondition bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
    curves.emplace_back("square " + std::string(to_string(bc)),
                        counting_curve(box_spectrum_p2({1.0, 1.0}, bc, 1e6), grid));
  }
  curves.emplace_back("torus", counting_curve(torus_spectrum_p2({1.0, 1.0}, 1e6), grid));

  std::size_t failing = 0;
  for (const auto& [name, curve] : curves) {
    double previous = INFINITY;
    bool ok = true;
    for (double lo : {1e3, 1e4, 1e5}) {
      const InequalityReport r = check_friedlander_bounds(curve, lo);
      const double ratio = r.fit->c2 / r.fit->c1;
      ok = ok && r.pass && std::isfinite(ratio) && ratio < previous;
      previous = ratio;
    }
    if (!ok) {
      ++failing;
      o.detail << name << " FAILS; ";
    }
  }
  o.pass = failing == 0;
  o.detail << curves.size() << " curves, " << failing << " failing (windows from 1e3, 1e4, 1e5)";
  return o;
}

}  // namespace

int main() {
  set_blas_threads(1);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1D exact spectrum vs shooting", exact_vs_shooting},
      {"1D Weyl constant", weyl_1d},
      {"square and torus Weyl constant", weyl_square_and_torus},
      {"Dirichlet monotonicity", ddm},
      {"Neumann monotonicity", ndm},
      {"scaling identity", scaling},
      {"cutoff inequality", cutoff},
      {"constant equality", constant_equality},
      {"L-shape sandwich", sandwich},
      {"discrete solver fidelity", fd_fidelity},
      {"variational solver", variational},
      {"energy splitting", energy_split},
      {"Friedlander bounds", friedlander},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "error: " << e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

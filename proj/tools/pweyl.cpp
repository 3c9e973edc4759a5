// Command-line front end: spectra, Weyl estimates and inequality checks.

#include "pweyl/checks.hpp"
#include "pweyl/counting.hpp"
#include "pweyl/errors.hpp"
#include "pweyl/exact.hpp"
#include "pweyl/fd.hpp"
#include "pweyl/io.hpp"
#include "pweyl/packing.hpp"
#include "pweyl/sweeps.hpp"
#include "pweyl/variational.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace pweyl;

enum ExitCode : int { kPass = 0, kViolation = 1, kUnsupported = 2, kDegenerate = 3, kSolverFailure = 4 };

struct Options {
  std::string domain;
  double p = 2.0;
  std::string bc = "dirichlet";
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  std::size_t per_decade = kPointsPerDecade;
  double window = 0.5;
  std::string output;
  std::string format = "json";
  // spectrum
  bool first_eigenvalue = false;
  double h = 0.0;
  double tolerance = 1e-8;
  std::size_t dimension_cap = kDefaultEigenDimensionCap;
  // weyl / sandwich
  std::string curve;
  std::string upper_curve;
  // check
  std::string statement;
  std::size_t sweep = 0;
  std::uint64_t seed = 0;
  double a = 2.0;
  std::string packing;
  double eps = 0.1;
  double lambda_prime = 20.0;
  double lambda_double_prime = 200.0;
  double window_lo = 0.0;
  double constant_tolerance = 0.005;
  // pack
  double pack_eps = 0.0;
  int depth = kDefaultDyadicDepth;
  int partition = 0;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

Domain load_domain(const std::string& path) {
  if (path.empty()) throw ArgumentError("--domain is required");
  return domain_from_json(read_json_file(path));
}

Domain load_domain_or_unit_interval(const std::string& path) {
  return path.empty() ? Domain::interval(0.0, 1.0) : load_domain(path);
}

double require_lambda_max(const Options& o) {
  if (!(o.lambda_max > 0.0)) throw ArgumentError("--lambda-max must be given and positive");
  return o.lambda_max;
}

/// [λ_min, λ_max] with λ_min defaulting to λ_max / 100.
std::pair<double, double> lambda_range(const Options& o) {
  const double hi = require_lambda_max(o);
  const double lo = o.lambda_min > 0.0 ? o.lambda_min : hi / 100.0;
  if (!(lo < hi)) throw EstimationError("degenerate λ range: need λ_min < λ_max");
  return {lo, hi};
}

double default_spacing(const Domain& d) {
  const Box bb = bounding_box(d);
  Rational shortest = bb.sides.front();
  for (const Box& b : d.boxes()) {
    for (const auto& s : b.sides) shortest = std::min(shortest, s);
  }
  return to_double(shortest) / 32.0;
}

Spectrum first_eigenvalue(const Domain& d, const Options& o, BoundaryCondition bc) {
  if (bc != BoundaryCondition::dirichlet) {
    throw UnsupportedError("--first-eigenvalue computes the first Dirichlet eigenvalue (the first Neumann eigenvalue is 0)");
  }
  if (d.kind() == DomainKind::torus) throw UnsupportedError("--first-eigenvalue needs an interval, box union or grid mask");
  const double h = d.kind() == DomainKind::grid_mask ? to_double(d.mask().spacing)
                                                     : (o.h > 0.0 ? o.h : default_spacing(d));
  VariationalOptions vo;
  vo.tolerance = o.tolerance;
  const VariationalResult r = min_p_rayleigh(GridSpace::from_domain(d, h, bc), o.p, vo);
  Spectrum s;
  s.eigenvalues = {Eigenvalue{r.lambda, 1}};
  s.p = o.p;
  s.bc = bc;
  s.dimension = d.dimension();
  s.domain_volume = volume(d);
  s.exactness = Exactness::discrete;
  s.complete_below = r.lambda;
  s.solver = SolverInfo{"min-p-rayleigh", h, o.tolerance, r.outer_iterations};
  return s;
}

Spectrum discrete_spectrum(const Domain& d, const Options& o, BoundaryCondition bc, double lambda_max) {
  const Domain mask = d.kind() == DomainKind::grid_mask ? d : rasterize(d, o.h > 0.0 ? o.h : default_spacing(d));
  Spectrum s = eigensolve_p2(assemble_fd(mask, bc), o.dimension_cap);
  const auto keep = std::find_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                 [&](const Eigenvalue& e) { return !(e.value < lambda_max); });
  s.eigenvalues.erase(keep, s.eigenvalues.end());
  s.complete_below = lambda_max;
  return s;
}

int run_spectrum(const Options& o) {
  const Domain d = load_domain(o.domain);
  const BoundaryCondition bc = parse_boundary_condition(o.bc);
  Spectrum s;
  if (o.first_eigenvalue) {
    s = first_eigenvalue(d, o, bc);
  } else {
    const double lambda_max = require_lambda_max(o);
    try {
      s = exact_spectrum(d, o.p, bc, lambda_max);
    } catch (const UnsupportedError&) {
      const bool discretizable = d.kind() == DomainKind::box_union || d.kind() == DomainKind::grid_mask;
      if (o.p == 2.0 && discretizable && bc != BoundaryCondition::periodic) {
        s = discrete_spectrum(d, o, bc, lambda_max);
      } else {
        std::ostringstream msg;
        msg << "no full-spectrum solver for a " << to_string(d.kind()) << " domain in dimension " << d.dimension()
            << " at p = " << format_double(o.p)
            << "; full spectra need p = 2 (or an interval). Use --first-eigenvalue for the first Dirichlet eigenvalue";
        throw UnsupportedError(msg.str());
      }
    }
  }
  if (o.format == "csv") {
    std::ostringstream out;
    write_spectrum_csv(out, s);
    emit(o.output, out.str());
  } else {
    emit(o.output, dump(to_json(s)));
  }
  return kPass;
}

Json reference_block(std::size_t n, double p, double c_hat) {
  const std::optional<double> c = weyl_constant(n, p);
  if (!c) {
    return Json{{"reference", nullptr},
                {"relative_error", nullptr},
                {"certified", false},
                {"note", "no closed-form constant for n >= 2, p != 2; the estimate is empirical"}};
  }
  return Json{{"reference", *c}, {"relative_error", (c_hat - *c) / *c}, {"certified", true}};
}

int run_weyl(const Options& o) {
  const Domain d = load_domain(o.domain);
  const BoundaryCondition bc = parse_boundary_condition(o.bc);
  const auto [lo, hi] = lambda_range(o);
  const Spectrum s = exact_spectrum(d, o.p, bc, hi);
  const CountingCurve curve = counting_curve(s, log_grid(lo, hi, o.per_decade));
  const WeylEstimate e = estimate_weyl_constant(curve, o.window);
  if (!o.curve.empty()) {
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    write_text_file(o.curve, csv.str());
  }
  Json j{{"domain", to_json(d)},
         {"dimension", d.dimension()},
         {"p", o.p},
         {"bc", std::string(to_string(bc))},
         {"domain_volume", volume(d)},
         {"estimate", to_json(e)}};
  j.update(reference_block(d.dimension(), o.p, e.c_hat));
  emit(o.output, dump(j));
  std::cerr << "c_hat=" << format_double(e.c_hat) << " spread=" << format_double(e.spread) << " window=["
            << format_double(e.window_lo) << ", " << format_double(e.window_hi) << "]\n";
  return kPass;
}

int finish(const Json& j, bool pass, const std::string& output) {
  emit(output, dump(j));
  return pass ? kPass : kViolation;
}

int report_sweeps(const std::string& statement, std::uint64_t seed, const std::vector<SweepSummary>& sweeps,
                  const std::string& output) {
  Json list = Json::array();
  bool pass = true;
  for (const auto& s : sweeps) {
    list.push_back(to_json(s));
    pass = pass && s.pass();
  }
  return finish(Json{{"statement", statement},
                     {"seed", seed},
                     {"verdict", pass ? "pass" : "fail"},
                     {"sweeps", std::move(list)}},
                pass, output);
}

std::vector<double> check_grid(const Options& o, double default_max) {
  const double hi = o.lambda_max > 0.0 ? o.lambda_max : default_max;
  const double lo = o.lambda_min > 0.0 ? o.lambda_min : 1.0;
  if (!(lo < hi)) throw EstimationError("degenerate λ range: need λ_min < λ_max");
  return log_grid_points(lo, hi, kSweepGridPoints);
}

int run_check(const Options& o, bool p_given) {
  const std::string& st = o.statement;
  const bool sweep = o.sweep > 0;
  if (st == "ddm" || st == "ndm") {
    if (sweep) {
      if (st == "ddm") {
        return report_sweeps(st, o.seed, {sweep_ddm_boxes(o.sweep, o.seed), sweep_ddm_intervals(o.sweep, o.seed)},
                             o.output);
      }
      return report_sweeps(st, o.seed, {sweep_ndm_intervals(o.sweep, o.seed), sweep_ndm_cubes({2, 3, 4})}, o.output);
    }
    if (o.packing.empty()) throw UnsupportedError(st + " needs --packing FILE or --sweep N");
    const Packing pk = packing_from_json(read_json_file(o.packing));
    const auto grid = check_grid(o, 1e5);
    const InequalityReport r =
        st == "ddm" ? check_dirichlet_monotonicity(pk, o.p, grid) : check_neumann_monotonicity(pk, o.p, grid);
    return finish(to_json(r), r.pass, o.output);
  }
  if (st == "scaling") {
    if (sweep) return report_sweeps(st, o.seed, {sweep_scaling(o.sweep, o.seed)}, o.output);
    const Domain d = load_domain_or_unit_interval(o.domain);
    const BoundaryCondition bc =
        d.kind() == DomainKind::torus ? BoundaryCondition::periodic : parse_boundary_condition(o.bc);
    const InequalityReport r = check_scaling(d, o.p, bc, o.a, check_grid(o, 1e5));
    return finish(to_json(r), r.pass, o.output);
  }
  if (st == "cutoff") {
    if (sweep) return report_sweeps(st, o.seed, {sweep_cutoff(o.sweep, o.seed)}, o.output);
    const Domain d = load_domain_or_unit_interval(o.domain);
    const InequalityReport r = check_cutoff_inequality(d, o.p, o.eps, o.lambda_prime, o.lambda_double_prime);
    return finish(to_json(r), r.pass, o.output);
  }
  if (st == "friedlander") {
    const Domain d = load_domain(o.domain);
    const BoundaryCondition bc = parse_boundary_condition(o.bc);
    const auto [lo, hi] = lambda_range(o);
    const CountingCurve c = counting_curve(exact_spectrum(d, o.p, bc, hi), log_grid(lo, hi, o.per_decade));
    const InequalityReport r =
        check_friedlander_bounds(c, o.window_lo > 0.0 ? std::optional<double>(o.window_lo) : std::nullopt);
    return finish(to_json(r), r.pass, o.output);
  }
  if (st == "constant-equality") {
    const Domain d = load_domain(o.domain);
    const auto [lo, hi] = lambda_range(o);
    const auto grid = log_grid(lo, hi, o.per_decade);
    const WeylEstimate dir =
        estimate_weyl_constant(counting_curve(exact_spectrum(d, o.p, BoundaryCondition::dirichlet, hi), grid), o.window);
    const WeylEstimate neu =
        estimate_weyl_constant(counting_curve(exact_spectrum(d, o.p, BoundaryCondition::neumann, hi), grid), o.window);
    const ConstantComparison c = check_constant_equality(dir, neu, o.constant_tolerance);
    return finish(Json{{"statement", st},
                       {"verdict", c.pass ? "pass" : "fail"},
                       {"dirichlet", to_json(dir)},
                       {"neumann", to_json(neu)},
                       {"relative_gap", c.relative_gap},
                       {"tolerance", c.tolerance}},
                  c.pass, o.output);
  }
  if (st == "energy-split") {
    const std::size_t n = sweep ? o.sweep : 1000;
    const std::vector<double> ps = p_given ? std::vector<double>{o.p} : std::vector<double>{1.5, 2.0, 3.0, 4.0};
    std::vector<SweepSummary> sweeps;
    for (double p : ps) {
      for (SweepSummary s : {sweep_energy_split_disjoint(n, o.seed, p), sweep_energy_split_restrict(n, o.seed, p),
                             sweep_gradient_consistency(n, o.seed, p)}) {
        s.statement += "/p=" + format_double(p);
        sweeps.push_back(std::move(s));
      }
    }
    return report_sweeps(st, o.seed, sweeps, o.output);
  }
  throw UnsupportedError("unknown statement '" + st +
                         "'; expected ddm, ndm, scaling, cutoff, friedlander, constant-equality or energy-split");
}

int run_pack(const Options& o) {
  const Domain d = load_domain(o.domain);
  Packing pk;
  if (o.partition > 0) {
    pk = partition_cubes(d, o.partition);
  } else if (o.pack_eps > 0.0) {
    pk = pack_cubes(d, o.pack_eps, o.depth);
  } else {
    throw ArgumentError("pack needs --eps E (sub-packing) or --partition K (cover)");
  }
  emit(o.output, dump(to_json(pk)));
  return kPass;
}

int run_sandwich(const Options& o) {
  const Domain d = load_domain(o.domain);
  if (o.p != 2.0) throw UnsupportedError("sandwich brackets p = 2 spectra only");
  const auto [lo, hi] = lambda_range(o);
  const SandwichResult s = sandwich_weyl(d, log_grid(lo, hi, o.per_decade), o.window);
  for (const auto& [path, curve] : {std::pair{o.curve, &s.lower}, std::pair{o.upper_curve, &s.upper}}) {
    if (path.empty()) continue;
    std::ostringstream csv;
    write_curve_csv(csv, *curve);
    write_text_file(path, csv.str());
  }
  Json j{{"domain", to_json(d)},
         {"domain_volume", volume(d)},
         {"estimate", to_json(s.estimate)},
         {"lower_at_max", s.lower.normalized.back()},
         {"upper_at_max", s.upper.normalized.back()},
         {"ordering", {{"verdict", s.ordering.pass ? "pass" : "fail"}, {"violations", s.ordering.violations}}}};
  j.update(reference_block(d.dimension(), 2.0, s.estimate.c_hat));
  return finish(j, s.ordering.pass, o.output);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--domain", o.domain, "Domain JSON file");
  cmd->add_option("--p", o.p, "Exponent p > 1")->check(CLI::PositiveNumber);
  cmd->add_option("--bc", o.bc, "dirichlet | neumann | periodic");
  cmd->add_option("--lambda-max", o.lambda_max, "Largest λ");
  cmd->add_option("--lambda-min", o.lambda_min, "Smallest λ (default λ_max / 100)");
  cmd->add_option("--output,-o", o.output, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue counting and Weyl-law experiments for the p-Laplacian"};
  app.set_config("--config", "", "TOML/INI run configuration; flags override it");
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues below λ_max (or λ₁ with --first-eigenvalue)");
  add_common(spectrum, o);
  spectrum->add_flag("--first-eigenvalue", o.first_eigenvalue, "Variational first Dirichlet eigenvalue, any p");
  spectrum->add_option("--spacing", o.h, "Grid spacing h for discrete solvers");
  spectrum->add_option("--tol", o.tolerance, "Variational tolerance");
  spectrum->add_option("--dimension-cap", o.dimension_cap, "Largest dense eigenproblem");
  spectrum->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* weyl = app.add_subcommand("weyl", "Counting curve and Weyl-constant estimate");
  add_common(weyl, o);
  weyl->add_option("--points-per-decade", o.per_decade, "λ grid density");
  weyl->add_option("--window", o.window, "Fraction of the log λ range used for the fit");
  weyl->add_option("--curve", o.curve, "Counting curve CSV output");

  auto* check = app.add_subcommand("check", "Check an inequality on one instance or a randomized sweep");
  add_common(check, o);
  check->add_option("statement", o.statement,
                    "ddm | ndm | scaling | cutoff | friedlander | constant-equality | energy-split")
      ->required();
  check->add_option("--sweep", o.sweep, "Number of random instances");
  check->add_option("--seed", o.seed, "Sweep seed");
  check->add_option("--a", o.a, "Scale factor")->check(CLI::PositiveNumber);
  check->add_option("--packing", o.packing, "Packing JSON file");
  check->add_option("--eps", o.eps, "Collar width ε");
  check->add_option("--lambda-prime", o.lambda_prime, "λ′");
  check->add_option("--lambda-double-prime", o.lambda_double_prime, "λ″");
  check->add_option("--window-lo", o.window_lo, "Lower edge of the Friedlander fit window");
  check->add_option("--window", o.window, "Fraction of the log λ range used for estimates");
  check->add_option("--points-per-decade", o.per_decade, "λ grid density");
  check->add_option("--tol", o.constant_tolerance, "Relative tolerance for constant-equality");

  auto* pack = app.add_subcommand("pack", "Dyadic cube sub-packing or cube partition of a box union");
  pack->add_option("--domain", o.domain, "Domain JSON file");
  pack->add_option("--eps", o.pack_eps, "Allowed volume deficit");
  pack->add_option("--depth", o.depth, "Dyadic depth cap");
  pack->add_option("--partition", o.partition, "Cover by cubes of side (shortest side) / K");
  pack->add_option("--output,-o", o.output, "Output file (default stdout)");

  auto* sandwich = app.add_subcommand("sandwich", "Dirichlet/Neumann box bracketing of N(λ), p = 2");
  add_common(sandwich, o);
  sandwich->add_option("--points-per-decade", o.per_decade, "λ grid density");
  sandwich->add_option("--window", o.window, "Fraction of the log λ range used for the fit");
  sandwich->add_option("--lower-curve", o.curve, "Lower counting curve CSV output");
  sandwich->add_option("--upper-curve", o.upper_curve, "Upper counting curve CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUnsupported;
  }

  try {
    int threads = 1;
    if (const char* env = std::getenv("PWEYL_THREADS")) threads = std::max(1, std::atoi(env));
    set_blas_threads(threads);
    if (!(o.p > 1.0)) throw ArgumentError("p must exceed 1");
    if (*spectrum) return run_spectrum(o);
    if (*weyl) return run_weyl(o);
    if (*check) return run_check(o, check->count("--p") > 0);
    if (*pack) return run_pack(o);
    if (*sandwich) return run_sandwich(o);
  } catch (const EstimationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const PackingError& e) {
    std::cerr << "packing failure: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const std::exception& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  }
  return kUnsupported;
}

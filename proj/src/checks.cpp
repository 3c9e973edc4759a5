#include "pweyl/checks.hpp"

#include "pweyl/errors.hpp"
#include "pweyl/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pweyl {

namespace {

void require_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw ArgumentError("inequality check: empty λ grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) throw ArgumentError("inequality check: λ must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ArgumentError("inequality check: λ grid must increase");
  }
}

CountingFunction exact_counter(const SpectrumProvider& provider, const Domain& d, double p, BoundaryCondition bc,
                               double lambda_max) {
  const Spectrum s = provider(d, p, bc, lambda_max);
  if (s.exactness != Exactness::exact) {
    throw UnsupportedError("inequality checks need exact spectra; the provider returned a " +
                           std::string(to_string(s.exactness)) + " spectrum");
  }
  return CountingFunction(s);
}

/// Records lhs/rhs and the margin `allowed - constrained` at one grid point.
void record(InequalityReport& r, double lambda, double lhs, double rhs, double margin) {
  r.lambdas.push_back(lambda);
  r.lhs.push_back(lhs);
  r.rhs.push_back(rhs);
  if (r.lambdas.size() == 1 || margin < r.worst_margin) r.worst_margin = margin;
  if (margin < 0) {
    r.pass = false;
    ++r.violations;
  }
}

InequalityReport packing_check(const Packing& pk, double p, const std::vector<double>& grid,
                               const SpectrumProvider& provider, bool dirichlet) {
  require_grid(grid);
  const PackingRelation wanted = dirichlet ? PackingRelation::sub : PackingRelation::cover;
  if (pk.relation != wanted) {
    throw ArgumentError(std::string(dirichlet ? "ddm" : "ndm") + " check expects a " +
                        std::string(to_string(wanted)) + " packing");
  }
  const PackingReport valid = validate_packing(pk);
  if (!valid.valid) throw ArgumentError("invalid packing: " + valid.failures.front());

  const BoundaryCondition bc = dirichlet ? BoundaryCondition::dirichlet : BoundaryCondition::neumann;
  const double top = grid.back();
  const CountingFunction ambient = exact_counter(provider, pk.ambient, p, bc, top);
  std::vector<CountingFunction> pieces;
  std::vector<double> factors;
  for (const auto& item : pk.items) {
    const double factor = std::pow(to_double(item.scale), p);
    factors.push_back(factor);
    pieces.push_back(exact_counter(provider, item.piece, p, bc, factor * top));
  }

  InequalityReport r;
  r.statement = dirichlet ? "ddm" : "ndm";
  for (double lambda : grid) {
    const auto lhs = static_cast<double>(ambient(lambda));
    double rhs = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) rhs += static_cast<double>(pieces[i](factors[i] * lambda));
    record(r, lambda, lhs, rhs, dirichlet ? lhs - rhs : rhs - lhs);
  }
  return r;
}

}  // namespace

SpectrumProvider exact_provider() {
  return [](const Domain& d, double p, BoundaryCondition bc, double lambda_max) {
    return exact_spectrum(d, p, bc, lambda_max);
  };
}

InequalityReport check_dirichlet_monotonicity(const Packing& pk, double p, const std::vector<double>& grid,
                                              const SpectrumProvider& provider) {
  return packing_check(pk, p, grid, provider, true);
}

InequalityReport check_neumann_monotonicity(const Packing& pk, double p, const std::vector<double>& grid,
                                            const SpectrumProvider& provider) {
  return packing_check(pk, p, grid, provider, false);
}

InequalityReport check_scaling(const Domain& d, double p, BoundaryCondition bc, double a,
                               const std::vector<double>& grid, const SpectrumProvider& provider) {
  require_grid(grid);
  if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("check_scaling: a must be positive");
  const double factor = std::pow(a, p);
  const CountingFunction scaled = exact_counter(provider, scale_domain(d, a), p, bc, grid.back());
  const CountingFunction base = exact_counter(provider, d, p, bc, factor * grid.back());
  InequalityReport r;
  r.statement = "scaling";
  for (double lambda : grid) {
    const auto lhs = static_cast<double>(scaled(lambda));
    const auto rhs = static_cast<double>(base(factor * lambda));
    record(r, lambda, lhs, rhs, lhs == rhs ? 0.0 : -std::abs(lhs - rhs));
  }
  return r;
}

double cutoff_lambda(double lambda_prime, double lambda_double_prime, double eps) {
  return lambda_prime * lambda_double_prime / (lambda_prime + lambda_double_prime + 1.0 / eps);
}

Domain boundary_strips(const Domain& interval, double eps) {
  if (interval.kind() != DomainKind::interval) throw ArgumentError("boundary strips: expects an interval");
  const Box& b = interval.boxes().front();
  const Rational e = to_rational(eps);
  if (!(e > 0) || !(2 * e < b.sides[0])) throw ArgumentError("cutoff: need 0 < ε < length / 2");
  return Domain::box_union({Box{{b.corner[0]}, {e}}, Box{{b.upper(0) - e}, {e}}});
}

InequalityReport check_cutoff_inequality(const Domain& interval, double p, double eps, double lambda_prime,
                                         double lambda_double_prime, const SpectrumProvider& provider) {
  if (!(lambda_prime > 0.0) || !(lambda_double_prime > 0.0)) throw ArgumentError("cutoff: λ′, λ″ must be positive");
  const Domain strips = boundary_strips(interval, eps);
  const double lambda = cutoff_lambda(lambda_prime, lambda_double_prime, eps);
  const double lhs_arg = std::pow(lambda, p);
  const double dirichlet_arg = std::pow(lambda_prime, p);
  const double strip_arg = std::pow(lambda_double_prime, p);

  const CountingFunction neumann = exact_counter(provider, interval, p, BoundaryCondition::neumann, lhs_arg);
  const CountingFunction dirichlet =
      exact_counter(provider, interval, p, BoundaryCondition::dirichlet, dirichlet_arg);
  // The Neumann spectrum of a disjoint union is the union of the spectra.
  double strip_count = 0.0;
  for (const Box& b : strips.boxes()) {
    const Domain piece = Domain::interval(b.corner[0], b.upper(0));
    strip_count +=
        static_cast<double>(exact_counter(provider, piece, p, BoundaryCondition::neumann, strip_arg)(strip_arg));
  }

  InequalityReport r;
  r.statement = "cutoff";
  const auto lhs = static_cast<double>(neumann(lhs_arg));
  const double rhs = static_cast<double>(dirichlet(dirichlet_arg)) + strip_count;
  record(r, lambda, lhs, rhs, rhs - lhs);
  return r;
}

InequalityReport check_friedlander_bounds(const CountingCurve& c, std::optional<double> window_lo) {
  if (c.lambdas.empty() || std::all_of(c.counts.begin(), c.counts.end(), [](std::size_t n) { return n == 0; })) {
    throw EstimationError("friedlander: the counting curve is identically zero");
  }
  if (c.counts.back() < 10) {
    throw EstimationError("friedlander: the curve must extend beyond its 10th eigenvalue");
  }
  const double lo = window_lo ? *window_lo : c.lambdas[window_start(c, 0.5)];
  const auto first = std::lower_bound(c.lambdas.begin(), c.lambdas.end(), lo);
  if (first == c.lambdas.end()) throw EstimationError("friedlander: window lies above the curve");
  const auto start = static_cast<std::size_t>(first - c.lambdas.begin());

  InequalityReport r;
  r.statement = "friedlander";
  FriedlanderFit fit;
  fit.c1 = std::numeric_limits<double>::infinity();
  fit.c2 = 0.0;
  fit.window_lo = c.lambdas[start];
  fit.window_hi = c.lambdas.back();
  for (std::size_t i = start; i < c.lambdas.size(); ++i) {
    const double f = c.normalized[i] / c.domain_volume;
    fit.c1 = std::min(fit.c1, f);
    fit.c2 = std::max(fit.c2, f);
    r.lambdas.push_back(c.lambdas[i]);
    r.lhs.push_back(static_cast<double>(c.counts[i]));
    r.rhs.push_back(f);
  }
  r.fit = fit;
  const bool ok = fit.c1 > 0.0 && fit.c1 <= fit.c2 && std::isfinite(fit.c2);
  r.pass = ok;
  r.violations = ok ? 0 : 1;
  r.worst_margin = ok ? fit.c1 : (fit.c1 > 0.0 ? -1.0 : -fit.c2);
  return r;
}

InequalityReport check_dirichlet_le_neumann(const CountingCurve& dirichlet, const CountingCurve& neumann) {
  if (dirichlet.lambdas != neumann.lambdas) throw ArgumentError("dirichlet-le-neumann: curves use different grids");
  InequalityReport r;
  r.statement = "dirichlet-le-neumann";
  for (std::size_t i = 0; i < dirichlet.lambdas.size(); ++i) {
    const auto lhs = static_cast<double>(dirichlet.counts[i]);
    const auto rhs = static_cast<double>(neumann.counts[i]);
    record(r, dirichlet.lambdas[i], lhs, rhs, rhs - lhs);
  }
  return r;
}

SandwichResult sandwich_weyl(const Domain& box_union, const std::vector<double>& grid, double window_fraction) {
  if (box_union.kind() != DomainKind::box_union && box_union.kind() != DomainKind::interval) {
    throw UnsupportedError("sandwich_weyl: expects a finite union of boxes");
  }
  require_grid(grid);
  std::vector<std::size_t> lower(grid.size(), 0);
  std::vector<std::size_t> upper(grid.size(), 0);
  for (const Box& b : box_union.boxes()) {
    const std::vector<double> sides = to_double(b.sides);
    const CountingFunction d(box_spectrum_p2(sides, BoundaryCondition::dirichlet, grid.back()));
    const CountingFunction n(box_spectrum_p2(sides, BoundaryCondition::neumann, grid.back()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      lower[i] += d(grid[i]);
      upper[i] += n(grid[i]);
    }
  }
  const std::size_t dim = box_union.dimension();
  const double vol = volume(box_union);
  SandwichResult out{make_curve(grid, std::move(lower), dim, 2.0, BoundaryCondition::dirichlet, vol),
                     make_curve(grid, std::move(upper), dim, 2.0, BoundaryCondition::neumann, vol),
                     {},
                     {}};
  out.ordering = check_dirichlet_le_neumann(out.lower, out.upper);
  out.ordering.statement = "sandwich";
  const WeylEstimate lo = estimate_weyl_constant(out.lower, window_fraction);
  const WeylEstimate hi = estimate_weyl_constant(out.upper, window_fraction);
  out.estimate.c_hat = 0.5 * (lo.c_hat + hi.c_hat);
  const std::size_t start = window_start(out.lower, window_fraction);
  double f_min = std::numeric_limits<double>::infinity();
  double f_max = 0.0;
  for (std::size_t i = start; i < grid.size(); ++i) {
    f_min = std::min(f_min, out.lower.normalized[i]);
    f_max = std::max(f_max, out.upper.normalized[i]);
  }
  out.estimate.spread = (f_max - f_min) / vol;
  out.estimate.window_lo = lo.window_lo;
  out.estimate.window_hi = lo.window_hi;
  out.estimate.method = "sandwich";
  return out;
}

ConstantComparison check_constant_equality(const WeylEstimate& dirichlet, const WeylEstimate& neumann, double tol) {
  if (!(tol >= 0.0)) throw ArgumentError("constant equality: tolerance must be nonnegative");
  if (!(neumann.c_hat > 0.0)) throw EstimationError("constant equality: Neumann estimate must be positive");
  ConstantComparison c;
  c.dirichlet = dirichlet.c_hat;
  c.neumann = neumann.c_hat;
  c.tolerance = tol;
  c.relative_gap = std::abs(dirichlet.c_hat - neumann.c_hat) / neumann.c_hat;
  c.pass = std::abs(dirichlet.c_hat - neumann.c_hat) <= tol * neumann.c_hat;
  return c;
}

}  // namespace pweyl

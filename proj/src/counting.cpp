#include "pweyl/counting.hpp"

#include "pweyl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pweyl {

namespace {

void require_complete(double lambda, double complete_below) {
  if (lambda > complete_below) {
    throw ArgumentError("count: λ = " + std::to_string(lambda) + " lies beyond the completeness threshold " +
                        std::to_string(complete_below) + " of the spectrum");
  }
}

}  // namespace

std::size_t count(const Spectrum& s, double lambda) {
  require_complete(lambda, s.complete_below);
  std::size_t total = 0;
  for (const auto& e : s.eigenvalues) {
    if (!(e.value < lambda)) break;
    total += e.multiplicity;
  }
  return total;
}

CountingFunction::CountingFunction(const Spectrum& s) : complete_below_(s.complete_below) {
  values_.reserve(s.eigenvalues.size());
  cumulative_.reserve(s.eigenvalues.size() + 1);
  cumulative_.push_back(0);
  for (const auto& e : s.eigenvalues) {
    values_.push_back(e.value);
    cumulative_.push_back(cumulative_.back() + e.multiplicity);
  }
}

std::size_t CountingFunction::operator()(double lambda) const {
  require_complete(lambda, complete_below_);
  const auto below = std::lower_bound(values_.begin(), values_.end(), lambda);
  return cumulative_[static_cast<std::size_t>(below - values_.begin())];
}

std::vector<double> log_grid_points(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || !(hi > lo)) throw ArgumentError("log_grid: need 0 < lo < hi");
  if (points < 2) throw ArgumentError("log_grid: need at least two points");
  std::vector<double> grid(points);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points_per_decade) {
  if (!(lo > 0.0) || !(hi > lo)) throw ArgumentError("log_grid: need 0 < lo < hi");
  const double decades = std::log10(hi / lo);
  const auto intervals = static_cast<std::size_t>(std::ceil(decades * static_cast<double>(points_per_decade) - 1e-9));
  return log_grid_points(lo, hi, std::max<std::size_t>(intervals, 1) + 1);
}

CountingCurve make_curve(std::vector<double> grid, std::vector<std::size_t> counts, std::size_t dimension, double p,
                         BoundaryCondition bc, double domain_volume) {
  if (grid.size() != counts.size()) throw ArgumentError("make_curve: grid and counts differ in length");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw ArgumentError("counting curve: λ samples must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ArgumentError("counting curve: λ samples must increase");
  }
  CountingCurve c;
  c.dimension = dimension;
  c.p = p;
  c.bc = bc;
  c.domain_volume = domain_volume;
  c.normalized.resize(grid.size());
  const double exponent = -static_cast<double>(dimension) / p;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    c.normalized[i] = std::pow(grid[i], exponent) * static_cast<double>(counts[i]);
  }
  c.lambdas = std::move(grid);
  c.counts = std::move(counts);
  return c;
}

CountingCurve counting_curve(const Spectrum& s, const std::vector<double>& grid) {
  const CountingFunction n(s);
  std::vector<std::size_t> counts;
  counts.reserve(grid.size());
  for (double lambda : grid) counts.push_back(n(lambda));
  return make_curve(grid, std::move(counts), s.dimension, s.p, s.bc, s.domain_volume);
}

std::size_t window_start(const CountingCurve& c, double window_fraction) {
  if (!(window_fraction > 0.0 && window_fraction < 1.0)) {
    throw ArgumentError("window fraction must lie in (0, 1)");
  }
  const double a = std::log(c.lambdas.front());
  const double b = std::log(c.lambdas.back());
  const double cut = std::exp(a + (1.0 - window_fraction) * (b - a));
  const auto it = std::lower_bound(c.lambdas.begin(), c.lambdas.end(), cut * (1.0 - 1e-12));
  return static_cast<std::size_t>(it - c.lambdas.begin());
}

WeylEstimate estimate_weyl_constant(const CountingCurve& c, double window_fraction) {
  if (c.lambdas.size() < kMinimumCurveSamples) {
    throw EstimationError("estimate_weyl_constant: need at least " + std::to_string(kMinimumCurveSamples) +
                          " samples, got " + std::to_string(c.lambdas.size()));
  }
  const std::size_t start = window_start(c, window_fraction);
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = start; i < c.lambdas.size(); ++i) {
    if (c.counts[i] == 0) {
      throw EstimationError("estimate_weyl_constant: N(λ) = 0 inside the fit window (λ range too low)");
    }
    sum += c.normalized[i];
    lo = std::min(lo, c.normalized[i]);
    hi = std::max(hi, c.normalized[i]);
  }
  const double samples = static_cast<double>(c.lambdas.size() - start);
  WeylEstimate e;
  e.c_hat = sum / samples / c.domain_volume;
  e.spread = (hi - lo) / c.domain_volume;
  e.window_lo = c.lambdas[start];
  e.window_hi = c.lambdas.back();
  e.method = "tail-mean";
  return e;
}

}  // namespace pweyl

#pragma once

#include "pweyl/spectrum.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pweyl {

/// Number of eigenvalues strictly below λ, with multiplicity.
std::size_t count(const Spectrum& s, double lambda);

/// Repeated counting against one spectrum via cumulative multiplicities.
class CountingFunction {
 public:
  explicit CountingFunction(const Spectrum& s);
  std::size_t operator()(double lambda) const;

 private:
  std::vector<double> values_;
  std::vector<std::size_t> cumulative_;
  double complete_below_;
};

inline constexpr std::size_t kPointsPerDecade = 200;

/// Log-spaced grid from lo to hi inclusive with the given density.
std::vector<double> log_grid(double lo, double hi, std::size_t points_per_decade = kPointsPerDecade);

/// Exactly `points` log-spaced samples from lo to hi inclusive.
std::vector<double> log_grid_points(double lo, double hi, std::size_t points);

/// N(λ) on a grid with its normalized form f(λ) = λ^{-n/p} N(λ).
struct CountingCurve {
  std::vector<double> lambdas;
  std::vector<std::size_t> counts;
  std::vector<double> normalized;
  std::size_t dimension = 1;
  double p = 2.0;
  BoundaryCondition bc = BoundaryCondition::dirichlet;
  double domain_volume = 1.0;

  friend bool operator==(const CountingCurve&, const CountingCurve&) = default;
};

CountingCurve counting_curve(const Spectrum& s, const std::vector<double>& grid);

/// Builds a curve from externally computed counts (e.g. sums over pieces).
CountingCurve make_curve(std::vector<double> grid, std::vector<std::size_t> counts, std::size_t dimension, double p,
                         BoundaryCondition bc, double domain_volume);

/// Tail-window estimate of the Weyl constant c in N(λ) ~ c vol λ^{n/p}.
/// `c_hat` and `spread` are per unit volume.
struct WeylEstimate {
  double c_hat = 0.0;
  double spread = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::string method;

  friend bool operator==(const WeylEstimate&, const WeylEstimate&) = default;
};

inline constexpr std::size_t kMinimumCurveSamples = 100;

/// Mean of f / vol over the top `window_fraction` of the log λ range; the
/// spread is max - min of f / vol there.
WeylEstimate estimate_weyl_constant(const CountingCurve& c, double window_fraction = 0.5);

/// First index whose λ lies in the top `window_fraction` of the log range.
std::size_t window_start(const CountingCurve& c, double window_fraction);

}  // namespace pweyl

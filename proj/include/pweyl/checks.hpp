#pragma once

#include "pweyl/counting.hpp"
#include "pweyl/domain.hpp"
#include "pweyl/packing.hpp"
#include "pweyl/spectrum.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pweyl {

/// C₁ = min f / vol and C₂ = max f / vol over [window_lo, window_hi].
struct FriedlanderFit {
  double c1 = 0.0;
  double c2 = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;

  friend bool operator==(const FriedlanderFit&, const FriedlanderFit&) = default;
};

/// Outcome of checking one statement at every λ of a grid.
///
/// The margin at a grid point is the amount by which the inequality holds
/// (allowed side minus constrained side; for identities minus |lhs - rhs|),
/// so the verdict passes iff the worst margin is nonnegative.
struct InequalityReport {
  std::string statement;
  std::vector<double> lambdas;
  std::vector<double> lhs;
  std::vector<double> rhs;
  bool pass = true;
  double worst_margin = 0.0;
  std::size_t violations = 0;
  std::optional<FriedlanderFit> fit;

  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

/// Source of spectra for the inequality checks; receives a domain, p, the
/// boundary condition and the largest λ that will be counted.
using SpectrumProvider = std::function<Spectrum(const Domain&, double, BoundaryCondition, double)>;

/// exact_spectrum as a provider.
SpectrumProvider exact_provider();

/// N⁰_ambient(λ) >= Σ N⁰_i(a_i^p λ) on a sub-packing.
InequalityReport check_dirichlet_monotonicity(const Packing& pk, double p, const std::vector<double>& grid,
                                              const SpectrumProvider& provider = exact_provider());

/// N_ambient(λ) <= Σ N_i(a_i^p λ) on a cover.
InequalityReport check_neumann_monotonicity(const Packing& pk, double p, const std::vector<double>& grid,
                                            const SpectrumProvider& provider = exact_provider());

/// N_{aU}(λ) = N_U(a^p λ) for one boundary condition.
InequalityReport check_scaling(const Domain& d, double p, BoundaryCondition bc, double a,
                               const std::vector<double>& grid,
                               const SpectrumProvider& provider = exact_provider());

/// λ = λ′λ″ / (λ′ + λ″ + 1/ε).
double cutoff_lambda(double lambda_prime, double lambda_double_prime, double eps);

/// The two boundary strips of width ε of an interval.
Domain boundary_strips(const Domain& interval, double eps);

/// N_U(λ^p) <= N⁰_U(λ′^p) + N_{U_ε}(λ″^p) on an interval, U_ε the two
/// boundary strips of width ε. Reports a single grid point at λ.
InequalityReport check_cutoff_inequality(const Domain& interval, double p, double eps, double lambda_prime,
                                         double lambda_double_prime,
                                         const SpectrumProvider& provider = exact_provider());

/// Fits C₁, C₂ on the samples with λ >= window_lo and checks 0 < C₁ <= C₂ < ∞.
/// The default window is the top half of the log range.
InequalityReport check_friedlander_bounds(const CountingCurve& c, std::optional<double> window_lo = std::nullopt);

/// N⁰(λ) <= N(λ) at every grid point.
InequalityReport check_dirichlet_le_neumann(const CountingCurve& dirichlet, const CountingCurve& neumann);

struct SandwichResult {
  CountingCurve lower;
  CountingCurve upper;
  WeylEstimate estimate;
  InequalityReport ordering;
};

/// p = 2 bracketing of a box union: Dirichlet counts of the member boxes from
/// below, Neumann counts from above.
SandwichResult sandwich_weyl(const Domain& box_union, const std::vector<double>& grid,
                             double window_fraction = 0.5);

struct ConstantComparison {
  bool pass = false;
  double dirichlet = 0.0;
  double neumann = 0.0;
  double relative_gap = 0.0;
  double tolerance = 0.0;
};

/// Passes iff |c⁰ - c| <= tol · c, with c the Neumann estimate.
ConstantComparison check_constant_equality(const WeylEstimate& dirichlet, const WeylEstimate& neumann, double tol);

}  // namespace pweyl

#include "pweyl/variational.hpp"

#include "pweyl/energy.hpp"
#include "pweyl/errors.hpp"
#include "pweyl/numeric.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace pweyl {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

/// The convex inner functional J(v) = (1/p) Σ|∇v|^p h^n - <rhs, v>.
struct InnerProblem {
  double p;
  std::vector<double> rhs;

  double value(const Field& v) const { return gradient_power_sum(v, p) / p - dot(rhs, v.values()); }

  std::vector<double> gradient(const Field& v) const {
    const Field lap = discrete_p_laplacian(v, p);
    std::vector<double> g(lap.values().begin(), lap.values().end());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= rhs[i];
    return g;
  }
};

Field unit_lp(const Field& u, double p) { return u.scaled(1.0 / std::pow(lp_power_sum(u, p), 1.0 / p)); }

}  // namespace

VariationalResult min_p_rayleigh(const GridSpacePtr& space, double p, const VariationalOptions& options) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ArgumentError("min_p_rayleigh: p must lie in (1, inf)");
  if (!space || space->node_count() == 0) throw ArgumentError("min_p_rayleigh: empty domain");
  if (space->bc() != BoundaryCondition::dirichlet) throw ArgumentError("min_p_rayleigh: Dirichlet spaces only");

  const double h_n = space->cell_measure();
  Field u = unit_lp(Field(space, std::vector<double>(space->node_count(), 1.0)), p);
  double lambda = p_energy(u, p);

  VariationalResult result{lambda, u, 0, 0, {lambda}, true};
  for (std::size_t outer = 1; outer <= options.max_outer; ++outer) {
    InnerProblem inner{p, std::vector<double>(u.size())};
    for (std::size_t i = 0; i < u.size(); ++i) inner.rhs[i] = signed_pow(u[i], p - 1.0) * h_n;
    const double rhs_norm = std::sqrt(dot(inner.rhs, inner.rhs));

    // For an eigenfunction u the exact inner minimizer is λ^{-1/(p-1)} u.
    Field v = u.scaled(std::pow(lambda, -1.0 / (p - 1.0)));
    double j_v = inner.value(v);
    std::vector<double> g = inner.gradient(v);
    for (std::size_t it = 0; it < options.max_inner; ++it) {
      const double g_sq = dot(g, g);
      if (std::sqrt(g_sq) <= options.inner_tolerance * rhs_norm) break;
      double step = options.armijo_initial_step;
      bool accepted = false;
      bool stalled = false;
      std::vector<double> trial_values(v.size());
      while (step > 1e-14) {
        for (std::size_t i = 0; i < v.size(); ++i) trial_values[i] = v[i] - step * g[i];
        Field trial(space, trial_values);
        const double j_trial = inner.value(trial);
        if (j_trial <= j_v - options.armijo_slope * step * g_sq) {
          // a decrease lost in the rounding of J means the floor is reached
          stalled = j_v - j_trial <= 1e-15 * (std::abs(j_v) + std::abs(j_trial));
          v = std::move(trial);
          j_v = j_trial;
          accepted = true;
          break;
        }
        step *= options.armijo_shrink;
      }
      ++result.inner_iterations;
      if (!accepted || stalled) break;
      g = inner.gradient(v);
    }

    if (v.is_zero()) throw SolverError("min_p_rayleigh: inner solve collapsed to the zero field");
    u = unit_lp(v, p);
    const double next = p_energy(u, p);
    result.energy_trace.push_back(next);
    if (next > lambda * (1.0 + options.monotonicity_slack)) result.monotone = false;
    result.outer_iterations = outer;
    const bool converged = std::abs(next - lambda) <= options.tolerance * lambda;
    lambda = next;
    if (converged) {
      result.lambda = lambda;
      // fix the sign so the first eigenfunction is nonnegative
      const double total = std::accumulate(u.values().begin(), u.values().end(), 0.0);
      result.eigenfunction = normalize(total < 0 ? u.scaled(-1.0) : u, NormalizationMode::gradient_lp, p);
      return result;
    }
  }
  std::ostringstream msg;
  msg << "min_p_rayleigh: no convergence after " << options.max_outer << " outer iterations; last energies:";
  const auto& trace = result.energy_trace;
  for (std::size_t i = trace.size() > 5 ? trace.size() - 5 : 0; i < trace.size(); ++i) msg << ' ' << trace[i];
  throw SolverError(msg.str());
}

}  // namespace pweyl

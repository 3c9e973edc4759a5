#pragma once

#include "pweyl/grid.hpp"

#include <cstddef>
#include <vector>

namespace pweyl {

struct VariationalOptions {
  double tolerance = 1e-8;            ///< outer stop: |λ_{t+1} - λ_t| <= tolerance λ_t
  std::size_t max_outer = 10000;
  double inner_tolerance = 1e-6;      ///< inner stop: ‖∇J‖ <= inner_tolerance ‖rhs‖
  std::size_t max_inner = 200000;
  double armijo_initial_step = 1.0;
  double armijo_shrink = 0.5;
  double armijo_slope = 1e-4;
  double monotonicity_slack = 1e-12;  ///< relative slack allowed in the descent check
};

struct VariationalResult {
  double lambda = 0.0;
  Field eigenfunction;                ///< normalized so that ‖∇u‖_p = 1
  std::size_t outer_iterations = 0;
  std::size_t inner_iterations = 0;
  std::vector<double> energy_trace;   ///< E(u_t) per outer iteration, starting at u_0
  bool monotone = true;               ///< energy_trace non-increasing within slack
};

/// First Dirichlet eigenvalue of the discrete p-Laplacian by inverse power
/// iteration: each outer step minimizes the strictly convex functional
/// (1/p) Σ|∇v|^p h^n - Σ |u|^{p-2} u v h^n by gradient descent with Armijo
/// backtracking, then renormalizes. Throws SolverError after max_outer steps.
VariationalResult min_p_rayleigh(const GridSpacePtr& space, double p, const VariationalOptions& options = {});

}  // namespace pweyl

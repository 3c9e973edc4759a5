#pragma once

#include "pweyl/grid.hpp"
#include "pweyl/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstddef>

namespace pweyl {

/// The p = 2 finite-difference operator on a grid-mask domain. Rows and
/// columns follow the node numbering of `space`.
struct DiscreteOperator {
  Eigen::SparseMatrix<double> matrix;
  GridSpacePtr space;
  double domain_volume = 0.0;

  double spacing() const { return space->spacing(); }
  BoundaryCondition bc() const { return space->bc(); }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix.rows()); }
};

/// Standard (2n+1)-point stencil scaled by h^-2; Dirichlet neighbors outside
/// the unknowns are zero ghosts, Neumann neighbors are mirror ghosts.
/// Throws ArgumentError for a disconnected mask.
DiscreteOperator assemble_fd(const Domain& mask_domain, BoundaryCondition bc);

inline constexpr std::size_t kDefaultEigenDimensionCap = 20000;

struct EigenDecomposition {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXd vectors;  ///< empty unless requested
  double max_relative_residual = 0.0;
};

/// Full symmetric eigendecomposition. Values-only requests use the banded
/// LAPACK driver; eigenvector requests use the dense divide-and-conquer one.
/// With vectors, the largest ‖Av - λv‖ / ‖A‖ is reported.
EigenDecomposition eigendecompose(const DiscreteOperator& op, bool with_vectors,
                                  std::size_t dimension_cap = kDefaultEigenDimensionCap);

/// All eigenvalues of the operator as a discrete Spectrum.
Spectrum eigensolve_p2(const DiscreteOperator& op, std::size_t dimension_cap = kDefaultEigenDimensionCap);

/// Threshold below which discrete eigenvalues are within `relative_error`
/// of their continuum counterparts, from the 1D stencil ratio sin²θ/θ²:
/// returns (4/h²) sin²θ* with 1 - sin²θ*/θ*² = relative_error.
double trusted_count_threshold(const DiscreteOperator& op, double relative_error);
double trusted_count_threshold(double spacing, double relative_error);

/// Caps the BLAS/LAPACK worker threads (OpenBLAS).
void set_blas_threads(int threads);

}  // namespace pweyl

#include "pweyl/fd.hpp"

#include "pweyl/errors.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

extern "C" void openblas_set_num_threads(int);

namespace pweyl {

void set_blas_threads(int threads) {
  if (threads < 1) throw ArgumentError("thread cap must be at least 1");
  openblas_set_num_threads(threads);
}

DiscreteOperator assemble_fd(const Domain& mask_domain, BoundaryCondition bc) {
  if (mask_domain.kind() != DomainKind::grid_mask) throw ArgumentError("assemble_fd: expects a grid-mask domain");
  GridSpacePtr space = GridSpace::from_mask(mask_domain, bc);
  if (!is_connected(*space)) {
    throw ArgumentError("assemble_fd: mask is disconnected; request the spectra of its components separately");
  }
  const double inv_h2 = 1.0 / (space->spacing() * space->spacing());
  const auto count = static_cast<Eigen::Index>(space->node_count());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(count) * (2 * space->dimension() + 1));
  for (std::size_t node = 0; node < space->node_count(); ++node) {
    double diagonal = 0.0;
    for (std::size_t axis = 0; axis < space->dimension(); ++axis) {
      for (int dir : {-1, 1}) {
        const std::int64_t nb = space->neighbor(node, axis, dir);
        if (nb >= 0) {
          diagonal += inv_h2;
          triplets.emplace_back(static_cast<Eigen::Index>(node), static_cast<Eigen::Index>(nb), -inv_h2);
        } else if (bc == BoundaryCondition::dirichlet) {
          // zero ghost: the coupling drops out, the diagonal keeps it
          diagonal += inv_h2;
        }
        // Neumann mirror ghost: u_ghost = u_node, the difference vanishes.
      }
    }
    triplets.emplace_back(static_cast<Eigen::Index>(node), static_cast<Eigen::Index>(node), diagonal);
  }
  DiscreteOperator op;
  op.matrix.resize(count, count);
  op.matrix.setFromTriplets(triplets.begin(), triplets.end());
  op.matrix.makeCompressed();
  op.space = std::move(space);
  op.domain_volume = volume(mask_domain);
  return op;
}

namespace {

Eigen::Index lower_bandwidth(const Eigen::SparseMatrix<double>& a) {
  Eigen::Index kd = 0;
  for (Eigen::Index col = 0; col < a.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, col); it; ++it) {
      kd = std::max(kd, it.row() - it.col());
    }
  }
  return kd;
}

void check_info(lapack_int info, const char* routine) {
  if (info != 0) throw SolverError(std::string(routine) + " failed with info = " + std::to_string(info));
}

}  // namespace

EigenDecomposition eigendecompose(const DiscreteOperator& op, bool with_vectors, std::size_t dimension_cap) {
  const auto n = static_cast<Eigen::Index>(op.dimension());
  if (op.dimension() > dimension_cap) {
    throw ResourceError("eigendecompose: operator dimension " + std::to_string(op.dimension()) + " exceeds cap " +
                        std::to_string(dimension_cap));
  }
  EigenDecomposition out;
  out.values.resize(n);
  if (n == 0) return out;
  const Eigen::Index kd = lower_bandwidth(op.matrix);

  if (!with_vectors && 2 * kd < n) {
    const Eigen::Index ldab = kd + 1;
    std::vector<double> band(static_cast<std::size_t>(ldab * n), 0.0);
    for (Eigen::Index col = 0; col < op.matrix.outerSize(); ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, col); it; ++it) {
        if (it.row() >= it.col()) band[static_cast<std::size_t>((it.row() - it.col()) + it.col() * ldab)] = it.value();
      }
    }
    double unused = 0.0;
    check_info(LAPACKE_dsbevd(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(n), static_cast<lapack_int>(kd),
                              band.data(), static_cast<lapack_int>(ldab), out.values.data(), &unused, 1),
               "dsbevd");
    return out;
  }

  Eigen::MatrixXd dense = Eigen::MatrixXd(op.matrix);
  check_info(LAPACKE_dsyevd(LAPACK_COL_MAJOR, with_vectors ? 'V' : 'N', 'L', static_cast<lapack_int>(n),
                            dense.data(), static_cast<lapack_int>(n), out.values.data()),
             "dsyevd");
  if (with_vectors) {
    out.vectors = std::move(dense);
    const double norm = out.values.cwiseAbs().maxCoeff();
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::VectorXd r = op.matrix * out.vectors.col(j) - out.values[j] * out.vectors.col(j);
      out.max_relative_residual = std::max(out.max_relative_residual, r.norm() / norm);
    }
  }
  return out;
}

Spectrum eigensolve_p2(const DiscreteOperator& op, std::size_t dimension_cap) {
  const EigenDecomposition eig = eigendecompose(op, false, dimension_cap);
  Spectrum s;
  s.eigenvalues = merge_eigenvalues(std::vector<double>(eig.values.data(), eig.values.data() + eig.values.size()));
  s.p = 2.0;
  s.bc = op.bc();
  s.dimension = op.space->dimension();
  s.domain_volume = op.domain_volume;
  s.exactness = Exactness::discrete;
  s.solver = SolverInfo{"fd-eigensolve", op.spacing(), 0.0, 0};
  return s;
}

double trusted_count_threshold(double spacing, double relative_error) {
  if (!(relative_error > 0.0) || relative_error > 0.1) {
    throw ArgumentError("trusted_count_threshold: relative error must lie in (0, 0.1]");
  }
  if (!(spacing > 0.0)) throw ArgumentError("trusted_count_threshold: spacing must be positive");
  const auto defect = [](double theta) {
    const double s = std::sin(theta) / theta;
    return 1.0 - s * s;
  };
  // the defect increases on (0, π/2]
  double lo = 0.0;
  double hi = std::numbers::pi / 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (defect(mid) <= relative_error ? lo : hi) = mid;
  }
  const double s = std::sin(lo);
  return 4.0 / (spacing * spacing) * s * s;
}

double trusted_count_threshold(const DiscreteOperator& op, double relative_error) {
  return trusted_count_threshold(op.spacing(), relative_error);
}

}  // namespace pweyl

#pragma once

#include "pweyl/domain.hpp"
#include "pweyl/spectrum.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pweyl {

/// Half-period 2π / (p sin(π/p)) of the generalized sine; π_2 = π.
double pi_p(double p);

/// The Weyl constant (p-1)^{-1/p} / π_p of the one-dimensional problem.
double weyl_constant_1d(double p);

/// Known Weyl constants: any p in one dimension, ω_n / (2π)^n at p = 2.
/// Empty for n >= 2, p != 2, where no closed form is available.
std::optional<double> weyl_constant(std::size_t dimension, double p);

struct ShootingOptions {
  std::size_t steps = 100000;
  double relative_width = 1e-10;
};

/// k-th Dirichlet eigenvalue of -(|u'|^{p-2}u')' = λ|u|^{p-2}u on (0, L).
///
/// Integrates the first-order system u' = |φ|^{1/(p-1)-1}φ, φ' = -λ|u|^{p-2}u
/// from u(0) = 0, φ(0) = 1 with fixed-step RK4 and bisects λ until the k-th
/// zero of u sits at L. Independent of the closed form used by spectrum_1d.
double shooting_eigenvalue_1d(double p, double length, std::size_t k, const ShootingOptions& options = {});

/// Closed-form 1D spectrum below lambda_max: λ_k = (p-1)(kπ_p/L)^p, with
/// k >= 1 (Dirichlet) or k >= 0 (Neumann).
Spectrum spectrum_1d(double p, double length, BoundaryCondition bc, double lambda_max);

inline constexpr std::size_t kDefaultLatticeCap = 10'000'000;

/// p = 2 spectrum of the box with the given sides: π² Σ (k_i/L_i)², k_i >= 1
/// (Dirichlet) or k_i >= 0 (Neumann).
Spectrum box_spectrum_p2(const std::vector<double>& sides, BoundaryCondition bc, double lambda_max,
                         std::size_t lattice_cap = kDefaultLatticeCap);

/// Flat torus spectrum 4π² Σ (k_i/L_i)², k ∈ ℤⁿ.
Spectrum torus_spectrum_p2(const std::vector<double>& periods, double lambda_max,
                           std::size_t lattice_cap = kDefaultLatticeCap);

/// Exact spectrum of an interval (any p), a single box (p = 2) or a torus
/// (p = 2). Throws UnsupportedError for anything else.
Spectrum exact_spectrum(const Domain& d, double p, BoundaryCondition bc, double lambda_max);

}  // namespace pweyl

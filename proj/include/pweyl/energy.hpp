#pragma once

#include "pweyl/grid.hpp"

namespace pweyl {

/// δ in |∇u|² + δ², used for p < 2 inside gradient evaluation only.
inline constexpr double kGradientRegularization = 1e-12;

/// Σ |∇u|^p h^n over the energy stencil (forward differences, Euclidean norm).
double gradient_power_sum(const Field& u, double p);

/// Σ |u|^p h^n over the unknowns.
double lp_power_sum(const Field& u, double p);

/// The p-Rayleigh quotient ∫|∇u|^p / ∫|u|^p of the discrete field.
double p_energy(const Field& u, double p);

enum class NormalizationMode { gradient_lp, sobolev_w1p };

/// Scales u so that ‖∇u‖_p = 1 (gradient_lp) or ‖u‖_{W^{1,p}} = 1.
Field normalize(const Field& u, NormalizationMode mode, double p);

/// Gradient of u ↦ (1/p) Σ |∇u|^p h^n with respect to the node values.
/// For p = 2 this is h^n times the (2n+1)-point operator applied to u.
Field discrete_p_laplacian(const Field& u, double p);

/// u = v + w on the union of the two supports. The supports must be disjoint
/// and no stencil edge may connect them.
Field combine_disjoint(const Field& v, const Field& w);

/// Restriction of u to the unknowns of `sub`, which must be a subset of u's.
Field restrict_field(const Field& u, const GridSpacePtr& sub);

}  // namespace pweyl

#pragma once

#include "pweyl/checks.hpp"
#include "pweyl/grid.hpp"
#include "pweyl/random.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pweyl {

/// Aggregate of a randomized property sweep. Instance `i` draws from the
/// Philox stream `i` under `seed`, so results do not depend on run order.
struct SweepSummary {
  std::string statement;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
  std::vector<std::size_t> failing_instances;

  bool pass() const { return violations == 0; }
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

inline constexpr std::size_t kSweepGridPoints = 1000;

// Random instance generators.
Packing random_interval_subpacking(Philox4x32& rng);
Packing random_box_subpacking(Philox4x32& rng);
Packing random_interval_partition(Philox4x32& rng);
double random_exponent(Philox4x32& rng);  ///< one of 1.5, 2, 3

/// Box sub-packings of planar rectangles, p = 2, λ ∈ [1, 1e5].
SweepSummary sweep_ddm_boxes(std::size_t instances, std::uint64_t seed);
/// Interval sub-packings, p ∈ {1.5, 2, 3}, λ ∈ [1, 1e6].
SweepSummary sweep_ddm_intervals(std::size_t instances, std::uint64_t seed);
/// Partitions of (0, 1), p ∈ {1.5, 2, 3}, λ ∈ [1, 1e6].
SweepSummary sweep_ndm_intervals(std::size_t instances, std::uint64_t seed);
/// Cube partitions of the unit square for the given k, p = 2, λ ∈ [1, 1e5].
SweepSummary sweep_ndm_cubes(const std::vector<int>& ks);
/// Random (domain, a, p, bc): intervals for any p, rectangles and 2-tori at p = 2.
SweepSummary sweep_scaling(std::size_t instances, std::uint64_t seed);
/// Random (ε, λ′, λ″, p) on the unit interval.
SweepSummary sweep_cutoff(std::size_t instances, std::uint64_t seed);

/// E(v + w) <= max(E(v), E(w)) for disjointly supported Dirichlet fields.
SweepSummary sweep_energy_split_disjoint(std::size_t instances, std::uint64_t seed, double p);
/// E(u) >= min(E(u|V), E(u|W)) for Neumann fields on a two-piece partition.
SweepSummary sweep_energy_split_restrict(std::size_t instances, std::uint64_t seed, double p);
/// ⟨Δ_p u, v⟩ against a central difference of (1/p) Σ|∇(u + tv)|^p h^n.
/// The margin is 1e-6 minus the relative error.
SweepSummary sweep_gradient_consistency(std::size_t instances, std::uint64_t seed, double p);

/// Relative error of the directional derivative check for one (u, v).
double gradient_check_error(const Field& u, const Field& v, double p);

/// Folds one instance outcome into a summary.
void accumulate(SweepSummary& s, std::size_t instance, bool pass, double margin);

}  // namespace pweyl

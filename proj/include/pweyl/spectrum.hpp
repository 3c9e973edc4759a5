#pragma once

#include "pweyl/boundary.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pweyl {

enum class Exactness { exact, oracle, discrete };

std::string_view to_string(Exactness e);
Exactness parse_exactness(std::string_view text);

struct Eigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 1;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Metadata of the solver that produced a discrete spectrum.
struct SolverInfo {
  std::string method;
  double spacing = 0.0;
  double tolerance = 0.0;
  std::size_t iterations = 0;

  friend bool operator==(const SolverInfo&, const SolverInfo&) = default;
};

/// Sorted eigenvalues with multiplicities. `complete_below` records the
/// threshold under which the list is known to contain every eigenvalue.
struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;
  double p = 2.0;
  BoundaryCondition bc = BoundaryCondition::dirichlet;
  std::size_t dimension = 1;
  double domain_volume = 1.0;
  Exactness exactness = Exactness::exact;
  double complete_below = std::numeric_limits<double>::infinity();
  std::optional<SolverInfo> solver;

  std::size_t total_multiplicity() const;
  /// The eigenvalues repeated according to multiplicity.
  std::vector<double> expanded() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

inline constexpr double kMultiplicityTolerance = 1e-9;

/// Sorts raw values and merges those equal to `relative_tolerance`.
std::vector<Eigenvalue> merge_eigenvalues(std::vector<double> values,
                                          double relative_tolerance = kMultiplicityTolerance);

/// Throws ValidationError unless the list is strictly increasing with
/// positive multiplicities.
void validate_spectrum(const Spectrum& s);

}  // namespace pweyl

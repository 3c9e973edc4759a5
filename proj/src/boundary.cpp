#include "pweyl/boundary.hpp"

#include "pweyl/errors.hpp"

#include <string>

namespace pweyl {

std::string_view to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::dirichlet: return "dirichlet";
    case BoundaryCondition::neumann: return "neumann";
    case BoundaryCondition::periodic: return "periodic";
  }
  return "unknown";
}

BoundaryCondition parse_boundary_condition(std::string_view text) {
  if (text == "dirichlet") return BoundaryCondition::dirichlet;
  if (text == "neumann") return BoundaryCondition::neumann;
  if (text == "periodic") return BoundaryCondition::periodic;
  throw ArgumentError("unknown boundary condition '" + std::string(text) + "'");
}

}  // namespace pweyl

#pragma once

#include <string_view>

namespace pweyl {

enum class BoundaryCondition { dirichlet, neumann, periodic };

std::string_view to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(std::string_view text);

}  // namespace pweyl

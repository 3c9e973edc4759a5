#include "pweyl/grid.hpp"

#include "pweyl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pweyl {

namespace {

std::vector<std::size_t> strides_for(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t i = shape.size(); i-- > 1;) strides[i - 1] = strides[i] * shape[i];
  return strides;
}

}  // namespace

GridSpacePtr GridSpace::from_mask(const Domain& mask_domain, BoundaryCondition bc) {
  const GridMask& mask = mask_domain.mask();
  const std::size_t n = mask.dimension();
  auto space = std::shared_ptr<GridSpace>(new GridSpace());
  space->bc_ = bc;
  space->spacing_ = to_double(mask.spacing);
  space->cell_measure_ = std::pow(space->spacing_, static_cast<double>(n));

  if (bc == BoundaryCondition::dirichlet) {
    for (auto s : mask.shape) space->shape_.push_back(s + 1);
    space->origin_ = to_double(mask.origin);
    space->strides_ = strides_for(space->shape_);
    const auto cell_strides = strides_for(mask.shape);
    space->active_.assign(std::accumulate(space->shape_.begin(), space->shape_.end(), std::size_t{1},
                                          std::multiplies<>()),
                          0);
    for (std::size_t v = 0; v < space->active_.size(); ++v) {
      const auto coords = space->lattice_coordinates(v);
      bool interior = true;
      // every cell with lower corner v - {0,1}^n must be in the mask
      for (std::size_t corner = 0; corner < (std::size_t{1} << n) && interior; ++corner) {
        std::size_t flat = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t offset = (corner >> i) & 1U;
          if (coords[i] < offset || coords[i] - offset >= mask.shape[i]) {
            interior = false;
            break;
          }
          flat += (coords[i] - offset) * cell_strides[i];
        }
        if (interior && mask.cells[flat] == 0) interior = false;
      }
      space->active_[v] = interior ? 1 : 0;
    }
  } else if (bc == BoundaryCondition::neumann) {
    space->shape_ = mask.shape;
    space->origin_ = to_double(mask.origin);
    for (auto& o : space->origin_) o += 0.5 * space->spacing_;
    space->strides_ = strides_for(space->shape_);
    space->active_ = mask.cells;
    for (auto& a : space->active_) a = a != 0 ? 1 : 0;
  } else {
    throw ArgumentError("grid spaces support dirichlet and neumann boundary conditions only");
  }
  space->build();
  if (space->node_count() == 0) throw ArgumentError("grid space has no unknowns (mask too thin for the spacing)");
  return space;
}

GridSpacePtr GridSpace::from_domain(const Domain& d, double h, BoundaryCondition bc) {
  if (d.kind() == DomainKind::grid_mask) return from_mask(d, bc);
  return from_mask(rasterize(d, h), bc);
}

GridSpacePtr GridSpace::with_active(std::vector<std::uint8_t> active) const {
  if (active.size() != active_.size()) throw ArgumentError("with_active: lattice size mismatch");
  auto space = std::shared_ptr<GridSpace>(new GridSpace());
  space->bc_ = bc_;
  space->spacing_ = spacing_;
  space->cell_measure_ = cell_measure_;
  space->shape_ = shape_;
  space->strides_ = strides_;
  space->origin_ = origin_;
  space->active_ = std::move(active);
  for (auto& a : space->active_) a = a != 0 ? 1 : 0;
  space->build();
  return space;
}

void GridSpace::build() {
  const std::size_t n = dimension();
  node_of_.assign(active_.size(), -1);
  nodes_.clear();
  for (std::size_t i = 0; i < active_.size(); ++i) {
    if (active_[i]) {
      node_of_[i] = static_cast<std::int64_t>(nodes_.size());
      nodes_.push_back(i);
    }
  }
  base_.clear();
  base_lattice_.clear();
  forward_.clear();
  std::vector<std::int64_t> fwd(n);
  for (std::size_t l = 0; l < active_.size(); ++l) {
    const auto coords = lattice_coordinates(l);
    bool touches = active_[l] != 0;
    for (std::size_t i = 0; i < n; ++i) {
      fwd[i] = coords[i] + 1 < shape_[i] ? node_of_[l + strides_[i]] : -1;
      touches = touches || fwd[i] >= 0;
    }
    // Neumann differences live on unknowns only; Dirichlet differences also
    // start at ghost vertices next to an unknown.
    const bool keep = bc_ == BoundaryCondition::neumann ? active_[l] != 0 : touches;
    if (!keep) continue;
    base_.push_back(node_of_[l]);
    base_lattice_.push_back(l);
    forward_.insert(forward_.end(), fwd.begin(), fwd.end());
  }
}

std::vector<std::size_t> GridSpace::lattice_coordinates(std::size_t lattice_index) const {
  std::vector<std::size_t> coords(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    coords[i] = lattice_index / strides_[i];
    lattice_index %= strides_[i];
  }
  return coords;
}

std::vector<double> GridSpace::position(std::size_t node) const {
  const auto coords = lattice_coordinates(nodes_.at(node));
  std::vector<double> x(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) x[i] = origin_[i] + spacing_ * static_cast<double>(coords[i]);
  return x;
}

bool GridSpace::same_lattice(const GridSpace& other) const {
  return bc_ == other.bc_ && spacing_ == other.spacing_ && shape_ == other.shape_ && origin_ == other.origin_;
}

std::int64_t GridSpace::neighbor(std::size_t node, std::size_t axis, int direction) const {
  const std::size_t l = nodes_.at(node);
  const std::size_t c = (l / strides_[axis]) % shape_[axis];
  if (direction > 0) {
    if (c + 1 >= shape_[axis]) return -1;
    return node_of_[l + strides_[axis]];
  }
  if (c == 0) return -1;
  return node_of_[l - strides_[axis]];
}

Field::Field(GridSpacePtr space, std::vector<double> values) : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw ArgumentError("Field: null grid space");
  if (values_.size() != space_->node_count()) {
    throw ArgumentError("Field: expected " + std::to_string(space_->node_count()) + " values, got " +
                        std::to_string(values_.size()));
  }
}

Field Field::zeros(GridSpacePtr space) {
  const std::size_t count = space->node_count();
  return Field(std::move(space), std::vector<double>(count, 0.0));
}

Field Field::from_function(GridSpacePtr space, const std::function<double(std::span<const double>)>& f) {
  std::vector<double> values(space->node_count());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(space->position(i));
  return Field(std::move(space), std::move(values));
}

Field Field::scaled(double t) const {
  std::vector<double> v = values_;
  for (auto& x : v) x *= t;
  return Field(space_, std::move(v));
}

bool Field::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x == 0.0; });
}

namespace {

template <typename Pred>
std::size_t count_components(const GridSpace& space, std::span<const double> values, Pred member) {
  const std::size_t count = space.node_count();
  std::vector<std::uint8_t> seen(count, 0);
  std::vector<std::size_t> stack;
  std::size_t components = 0;
  for (std::size_t start = 0; start < count; ++start) {
    if (seen[start] || !member(values.empty() ? 0.0 : values[start])) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t axis = 0; axis < space.dimension(); ++axis) {
        for (int dir : {-1, 1}) {
          const std::int64_t nb = space.neighbor(node, axis, dir);
          if (nb < 0) continue;
          const auto k = static_cast<std::size_t>(nb);
          if (seen[k] || !member(values.empty() ? 0.0 : values[k])) continue;
          seen[k] = 1;
          stack.push_back(k);
        }
      }
    }
  }
  return components;
}

}  // namespace

std::size_t nodal_domain_count(const Field& u) {
  return count_components(u.space(), u.values(), [](double x) { return x > 0.0; }) +
         count_components(u.space(), u.values(), [](double x) { return x < 0.0; });
}

bool is_connected(const GridSpace& space) {
  return count_components(space, {}, [](double) { return true; }) == 1;
}

}  // namespace pweyl

#pragma once

#include "pweyl/boundary.hpp"
#include "pweyl/domain.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace pweyl {

/// Unknowns of a finite-difference discretization on a regular lattice.
///
/// Dirichlet spaces live on the vertices of a grid-mask: a vertex is an
/// unknown when every cell touching it belongs to the mask, all other
/// vertices are ghost nodes carrying the value zero. Neumann spaces live on
/// the cell centers of the mask; neighbors outside the mask are mirror ghosts,
/// so no flux crosses the boundary.
///
/// The energy stencil is a list of base points with one forward neighbor per
/// axis; the discrete gradient at a base point is the vector of forward
/// differences.
class GridSpace {
 public:
  static std::shared_ptr<const GridSpace> from_mask(const Domain& mask_domain, BoundaryCondition bc);

  /// Rasterizes an interval or box union at spacing h first.
  static std::shared_ptr<const GridSpace> from_domain(const Domain& d, double h, BoundaryCondition bc);

  /// A space on the same lattice with a different set of unknowns.
  std::shared_ptr<const GridSpace> with_active(std::vector<std::uint8_t> active) const;

  std::size_t dimension() const { return shape_.size(); }
  double spacing() const { return spacing_; }
  BoundaryCondition bc() const { return bc_; }
  const std::vector<std::size_t>& lattice_shape() const { return shape_; }
  const std::vector<double>& lattice_origin() const { return origin_; }
  std::size_t lattice_size() const { return active_.size(); }
  std::size_t node_count() const { return nodes_.size(); }
  double cell_measure() const { return cell_measure_; }

  /// Node index at a lattice point, or -1 for ghost / inactive points.
  std::int64_t node_at(std::size_t lattice_index) const { return node_of_[lattice_index]; }
  std::size_t lattice_index(std::size_t node) const { return nodes_[node]; }
  const std::vector<std::uint8_t>& active_mask() const { return active_; }
  std::size_t lattice_stride(std::size_t axis) const { return strides_[axis]; }

  std::vector<std::size_t> lattice_coordinates(std::size_t lattice_index) const;
  std::vector<double> position(std::size_t node) const;

  bool same_lattice(const GridSpace& other) const;

  // Energy stencil.
  std::size_t base_count() const { return base_.size(); }
  std::int64_t base_node(std::size_t b) const { return base_[b]; }
  std::size_t base_lattice_index(std::size_t b) const { return base_lattice_[b]; }
  std::int64_t forward_node(std::size_t b, std::size_t axis) const { return forward_[b * dimension() + axis]; }

  /// Unknowns adjacent to `node` along ±axis (-1 when not an unknown).
  std::int64_t neighbor(std::size_t node, std::size_t axis, int direction) const;

 private:
  GridSpace() = default;
  void build();

  BoundaryCondition bc_ = BoundaryCondition::dirichlet;
  double spacing_ = 0.0;
  double cell_measure_ = 0.0;
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::vector<double> origin_;
  std::vector<std::uint8_t> active_;
  std::vector<std::int64_t> node_of_;
  std::vector<std::size_t> nodes_;
  std::vector<std::int64_t> base_;
  std::vector<std::size_t> base_lattice_;
  std::vector<std::int64_t> forward_;
};

using GridSpacePtr = std::shared_ptr<const GridSpace>;

/// Real values on the unknowns of a grid space.
class Field {
 public:
  Field(GridSpacePtr space, std::vector<double> values);

  static Field zeros(GridSpacePtr space);
  static Field from_function(GridSpacePtr space, const std::function<double(std::span<const double>)>& f);

  const GridSpace& space() const { return *space_; }
  const GridSpacePtr& space_ptr() const { return space_; }
  std::span<const double> values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  Field scaled(double t) const;
  bool is_zero() const;

 private:
  GridSpacePtr space_;
  std::vector<double> values_;
};

/// Number of connected components of {u > 0} and {u < 0} under lattice adjacency.
std::size_t nodal_domain_count(const Field& u);

/// Whether the unknowns form one connected set under lattice adjacency.
bool is_connected(const GridSpace& space);

}  // namespace pweyl

#pragma once

#include "pweyl/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace pweyl {

enum class DomainKind { interval, box_union, grid_mask, torus };

std::string_view to_string(DomainKind kind);

/// Closed axis-aligned box [corner, corner + sides].
struct Box {
  std::vector<Rational> corner;
  std::vector<Rational> sides;

  std::size_t dimension() const { return corner.size(); }
  Rational volume() const;
  Rational upper(std::size_t axis) const { return corner[axis] + sides[axis]; }

  friend bool operator==(const Box&, const Box&) = default;
};

/// Volume of the intersection of two closed boxes (zero when they only touch).
Rational intersection_volume(const Box& a, const Box& b);

/// Cells of a regular grid; cell `i` spans origin + [index, index + 1) * spacing.
/// Cells are stored row-major with the last axis varying fastest.
struct GridMask {
  std::vector<Rational> origin;
  Rational spacing;
  std::vector<std::size_t> shape;
  std::vector<std::uint8_t> cells;

  std::size_t dimension() const { return shape.size(); }
  std::size_t cell_count() const;
  std::size_t flat_size() const;

  friend bool operator==(const GridMask&, const GridMask&) = default;
};

/// A computational region. Intervals are stored as a single one-dimensional
/// box so that every box-based routine handles them uniformly.
class Domain {
 public:
  static Domain interval(Rational lo, Rational hi);
  static Domain interval(double lo, double hi) { return interval(to_rational(lo), to_rational(hi)); }
  static Domain box(std::vector<Rational> corner, std::vector<Rational> sides);
  static Domain box_union(std::vector<Box> boxes);
  static Domain unit_cube(std::size_t dimension);
  static Domain grid_mask(GridMask mask);
  static Domain torus(std::vector<Rational> periods);

  DomainKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }

  /// Boxes of an interval or box-union domain.
  const std::vector<Box>& boxes() const;
  const GridMask& mask() const;
  const std::vector<Rational>& periods() const;

  /// True for intervals and single-box box unions.
  bool is_single_box() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain() = default;

  DomainKind kind_ = DomainKind::box_union;
  std::size_t dimension_ = 0;
  std::vector<Box> boxes_;
  GridMask mask_;
  std::vector<Rational> periods_;
};

Rational exact_volume(const Domain& d);
double volume(const Domain& d);

/// Multiplies every coordinate by `a`.
Domain scale_domain(const Domain& d, const Rational& a);
Domain scale_domain(const Domain& d, double a);

/// Translates an interval or box-union domain by `offset`.
Domain translate_domain(const Domain& d, const std::vector<Rational>& offset);

/// Bounding box of an interval, box-union or grid-mask domain.
Box bounding_box(const Domain& d);

/// Cell-center rasterization of an interval or box union. The grid is anchored
/// at the bounding-box corner.
Domain rasterize(const Domain& d, const Rational& h);
Domain rasterize(const Domain& d, double h);

/// Whether the closed point set of the domain contains `x`.
bool contains_point(const Domain& d, const std::vector<Rational>& x);

}  // namespace pweyl

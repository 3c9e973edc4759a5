#pragma once

#include "pweyl/domain.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pweyl {

/// `sub`: the placed pieces are pairwise disjoint open sets inside the ambient.
/// `cover`: the closures of the placed pieces cover the ambient closure and
/// overlap only in null sets.
enum class PackingRelation { sub, cover };

std::string_view to_string(PackingRelation r);

/// One piece of a packing; it occupies scale * piece + offset.
struct PackingItem {
  Rational scale;
  std::vector<Rational> offset;
  Domain piece;
};

struct Packing {
  PackingRelation relation = PackingRelation::sub;
  std::vector<PackingItem> items;
  Domain ambient = Domain::unit_cube(1);
};

/// The set scale * piece + offset as a box-union domain.
Domain placed_piece(const PackingItem& item);

/// Σ scale^n · vol(piece).
Rational packed_volume(const Packing& p);

struct PackingReport {
  bool valid = true;
  std::vector<std::string> failures;
  Rational packed_volume;
  Rational ambient_volume;
};

/// Checks the invariants of a packing in exact rational arithmetic.
PackingReport validate_packing(const Packing& p);

/// Thrown when the dyadic refinement cannot reach the requested volume.
class PackingError : public std::runtime_error {
 public:
  PackingError(const std::string& what, Rational achieved, Rational target)
      : std::runtime_error(what), achieved_(std::move(achieved)), target_(std::move(target)) {}
  const Rational& achieved() const { return achieved_; }
  const Rational& target() const { return target_; }

 private:
  Rational achieved_;
  Rational target_;
};

inline constexpr int kDefaultDyadicDepth = 12;

/// Dyadic sub-packing of a box union by scaled unit cubes with total volume
/// at least vol(ambient) - eps. Cubes are taken level by level, largest first.
Packing pack_cubes(const Domain& ambient, double eps, int depth_cap = kDefaultDyadicDepth);

/// Exact cover of a box union by equal cubes of side (shortest side) / k.
Packing partition_cubes(const Domain& ambient, int k);

}  // namespace pweyl

#include "pweyl/packing.hpp"

#include "pweyl/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pweyl {

std::string_view to_string(PackingRelation r) { return r == PackingRelation::sub ? "sub" : "cover"; }

namespace {

const std::vector<Box>& piece_boxes(const Domain& d) {
  if (d.kind() != DomainKind::interval && d.kind() != DomainKind::box_union) {
    throw ArgumentError("packings only support interval and box-union domains");
  }
  return d.boxes();
}

Rational power(const Rational& a, std::size_t n) {
  Rational out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= a;
  return out;
}

std::vector<Box> placed_boxes(const PackingItem& item) {
  std::vector<Box> out = piece_boxes(item.piece);
  for (auto& b : out) {
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      b.corner[i] = b.corner[i] * item.scale + item.offset[i];
      b.sides[i] *= item.scale;
    }
  }
  return out;
}

Rational covered_volume(const Box& b, const std::vector<Box>& region) {
  Rational v = 0;
  for (const auto& r : region) v += intersection_volume(b, r);
  return v;
}

/// Smallest corner coordinate along axis 0 and the largest upper coordinate.
struct Extent {
  Rational lo;
  Rational hi;
};

Extent axis0_extent(const std::vector<Box>& boxes) {
  Extent e{boxes.front().corner[0], boxes.front().upper(0)};
  for (const auto& b : boxes) {
    e.lo = std::min(e.lo, b.corner[0]);
    e.hi = std::max(e.hi, b.upper(0));
  }
  return e;
}

}  // namespace

Domain placed_piece(const PackingItem& item) {
  if (item.offset.size() != item.piece.dimension()) throw ArgumentError("packing item offset dimension mismatch");
  if (item.scale <= 0) throw ArgumentError("packing item scale must be positive");
  return Domain::box_union(placed_boxes(item));
}

Rational packed_volume(const Packing& p) {
  Rational v = 0;
  for (const auto& item : p.items) v += power(item.scale, item.piece.dimension()) * exact_volume(item.piece);
  return v;
}

PackingReport validate_packing(const Packing& p) {
  PackingReport report;
  const auto fail = [&report](std::string message) {
    report.valid = false;
    report.failures.push_back(std::move(message));
  };
  report.ambient_volume = exact_volume(p.ambient);
  const std::vector<Box>& ambient = piece_boxes(p.ambient);
  const std::size_t n = p.ambient.dimension();

  std::vector<std::vector<Box>> placed;
  placed.reserve(p.items.size());
  for (std::size_t i = 0; i < p.items.size(); ++i) {
    const auto& item = p.items[i];
    if (item.piece.dimension() != n || item.offset.size() != n) {
      fail("item " + std::to_string(i) + ": dimension mismatch");
      placed.emplace_back();
      continue;
    }
    if (item.scale <= 0) {
      fail("item " + std::to_string(i) + ": non-positive scale");
      placed.emplace_back();
      continue;
    }
    placed.push_back(placed_boxes(item));
  }
  report.packed_volume = packed_volume(p);

  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (const auto& b : placed[i]) {
      if (covered_volume(b, ambient) != b.volume()) {
        fail("item " + std::to_string(i) + ": not contained in the ambient domain");
        break;
      }
    }
  }

  // Sweep along axis 0 so only pieces with overlapping extents are compared.
  std::vector<std::size_t> order(placed.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Extent> extents;
  extents.reserve(placed.size());
  for (const auto& boxes : placed) extents.push_back(boxes.empty() ? Extent{} : axis0_extent(boxes));
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return extents[a].lo < extents[b].lo; });
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    if (placed[i].empty()) continue;
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const std::size_t j = order[oj];
      if (placed[j].empty()) continue;
      if (extents[j].lo >= extents[i].hi) break;
      Rational overlap = 0;
      for (const auto& a : placed[i]) overlap += covered_volume(a, placed[j]);
      if (overlap > 0) {
        fail("items " + std::to_string(std::min(i, j)) + " and " + std::to_string(std::max(i, j)) +
             " overlap with positive measure");
      }
    }
  }

  if (report.packed_volume > report.ambient_volume) fail("packed volume exceeds ambient volume");
  if (p.relation == PackingRelation::cover && report.packed_volume != report.ambient_volume) {
    fail("cover does not exhaust the ambient volume (" + to_string(report.packed_volume) + " of " +
         to_string(report.ambient_volume) + ")");
  }
  return report;
}

Packing pack_cubes(const Domain& ambient, double eps, int depth_cap) {
  const std::vector<Box>& region = piece_boxes(ambient);
  const Rational total = exact_volume(ambient);
  if (!(eps > 0) || to_rational(eps) >= total) throw ArgumentError("pack_cubes: need 0 < eps < vol(ambient)");
  if (depth_cap < 0) throw ArgumentError("pack_cubes: depth cap must be non-negative");
  const Rational target = total - to_rational(eps);
  const std::size_t n = ambient.dimension();
  const Box bbox = bounding_box(ambient);
  const Rational root_side = *std::max_element(bbox.sides.begin(), bbox.sides.end());

  Packing out{PackingRelation::sub, {}, ambient};
  const Domain unit = Domain::unit_cube(n);
  Rational achieved = 0;

  std::vector<std::vector<Rational>> frontier{bbox.corner};
  Rational side = root_side;
  for (int depth = 0; depth <= depth_cap && !frontier.empty(); ++depth) {
    Rational cell_volume = power(side, n);
    std::vector<std::vector<Rational>> next;
    for (const auto& corner : frontier) {
      const Box cell{corner, std::vector<Rational>(n, side)};
      const Rational inside = covered_volume(cell, region);
      if (inside == cell_volume) {
        out.items.push_back(PackingItem{side, corner, unit});
        achieved += cell_volume;
      } else if (inside > 0) {
        const Rational half = side / 2;
        for (std::size_t child = 0; child < (std::size_t{1} << n); ++child) {
          std::vector<Rational> c = corner;
          for (std::size_t i = 0; i < n; ++i) {
            if ((child >> i) & 1U) c[i] += half;
          }
          next.push_back(std::move(c));
        }
      }
    }
    if (achieved >= target) return out;
    frontier = std::move(next);
    side /= 2;
  }
  throw PackingError("pack_cubes: dyadic depth cap " + std::to_string(depth_cap) + " reached with volume " +
                         to_string(achieved) + " < target " + to_string(target),
                     achieved, target);
}

Packing partition_cubes(const Domain& ambient, int k) {
  if (k < 1) throw ArgumentError("partition_cubes: k must be a positive integer");
  const std::vector<Box>& region = piece_boxes(ambient);
  const std::size_t n = ambient.dimension();
  Rational shortest = region.front().sides.front();
  for (const auto& b : region) {
    for (const auto& s : b.sides) shortest = std::min(shortest, s);
  }
  const Rational side = shortest / k;
  const Domain unit = Domain::unit_cube(n);

  Packing out{PackingRelation::cover, {}, ambient};
  for (const auto& b : region) {
    std::vector<std::size_t> counts;
    for (const auto& s : b.sides) {
      const Rational q = s / side;
      if (boost::multiprecision::denominator(q) != 1) {
        throw ArgumentError("partition_cubes: box side " + to_string(s) + " is not a multiple of " + to_string(side));
      }
      counts.push_back(boost::multiprecision::numerator(q).convert_to<std::size_t>());
    }
    const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{1}, std::multiplies<>());
    std::vector<std::size_t> index(n);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rest = flat;
      for (std::size_t i = n; i-- > 0;) {
        index[i] = rest % counts[i];
        rest /= counts[i];
      }
      std::vector<Rational> corner(n);
      for (std::size_t i = 0; i < n; ++i) corner[i] = b.corner[i] + side * Rational(index[i]);
      out.items.push_back(PackingItem{side, std::move(corner), unit});
    }
  }
  return out;
}

}  // namespace pweyl

#include "pweyl/domain.hpp"

#include "pweyl/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pweyl {

std::string_view to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::interval: return "interval";
    case DomainKind::box_union: return "box-union";
    case DomainKind::grid_mask: return "grid-mask";
    case DomainKind::torus: return "torus";
  }
  return "unknown";
}

Rational Box::volume() const {
  Rational v = 1;
  for (const auto& s : sides) v *= s;
  return v;
}

Rational intersection_volume(const Box& a, const Box& b) {
  Rational v = 1;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const Rational lo = std::max(a.corner[i], b.corner[i]);
    const Rational hi = std::min(a.upper(i), b.upper(i));
    if (hi <= lo) return Rational(0);
    v *= hi - lo;
  }
  return v;
}

std::size_t GridMask::flat_size() const {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t GridMask::cell_count() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](auto c) { return c != 0; }));
}

namespace {

void validate_box(const Box& b, std::size_t dimension) {
  if (b.corner.size() != dimension || b.sides.size() != dimension) {
    throw ValidationError("box dimension mismatch: expected " + std::to_string(dimension));
  }
  for (const auto& s : b.sides) {
    if (s <= 0) throw ValidationError("box side lengths must be strictly positive");
  }
}

}  // namespace

Domain Domain::interval(Rational lo, Rational hi) {
  if (hi <= lo) throw ValidationError("interval requires lo < hi");
  Domain d;
  d.kind_ = DomainKind::interval;
  d.dimension_ = 1;
  d.boxes_.push_back(Box{{lo}, {hi - lo}});
  return d;
}

Domain Domain::box(std::vector<Rational> corner, std::vector<Rational> sides) {
  return box_union({Box{std::move(corner), std::move(sides)}});
}

Domain Domain::box_union(std::vector<Box> boxes) {
  if (boxes.empty()) throw ValidationError("box-union needs at least one box");
  const std::size_t n = boxes.front().dimension();
  if (n == 0) throw ValidationError("box-union dimension must be positive");
  for (const auto& b : boxes) validate_box(b, n);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (intersection_volume(boxes[i], boxes[j]) > 0) {
        throw ValidationError("boxes " + std::to_string(i) + " and " + std::to_string(j) +
                              " overlap with positive measure");
      }
    }
  }
  Domain d;
  d.kind_ = DomainKind::box_union;
  d.dimension_ = n;
  d.boxes_ = std::move(boxes);
  return d;
}

Domain Domain::unit_cube(std::size_t dimension) {
  return box(std::vector<Rational>(dimension, Rational(0)), std::vector<Rational>(dimension, Rational(1)));
}

Domain Domain::grid_mask(GridMask mask) {
  if (mask.shape.empty()) throw ValidationError("grid-mask dimension must be positive");
  if (mask.origin.size() != mask.shape.size()) throw ValidationError("grid-mask origin/shape mismatch");
  if (mask.spacing <= 0) throw ValidationError("grid-mask spacing must be strictly positive");
  if (mask.cells.size() != mask.flat_size()) throw ValidationError("grid-mask cell array has wrong size");
  if (mask.cell_count() == 0) throw ValidationError("grid-mask is empty");
  Domain d;
  d.kind_ = DomainKind::grid_mask;
  d.dimension_ = mask.shape.size();
  d.mask_ = std::move(mask);
  return d;
}

Domain Domain::torus(std::vector<Rational> periods) {
  if (periods.empty()) throw ValidationError("torus dimension must be positive");
  for (const auto& l : periods) {
    if (l <= 0) throw ValidationError("torus periods must be strictly positive");
  }
  Domain d;
  d.kind_ = DomainKind::torus;
  d.dimension_ = periods.size();
  d.periods_ = std::move(periods);
  return d;
}

const std::vector<Box>& Domain::boxes() const {
  if (kind_ != DomainKind::interval && kind_ != DomainKind::box_union) {
    throw ArgumentError(std::string("domain of kind ") + std::string(to_string(kind_)) + " has no boxes");
  }
  return boxes_;
}

const GridMask& Domain::mask() const {
  if (kind_ != DomainKind::grid_mask) throw ArgumentError("domain is not a grid-mask");
  return mask_;
}

const std::vector<Rational>& Domain::periods() const {
  if (kind_ != DomainKind::torus) throw ArgumentError("domain is not a torus");
  return periods_;
}

bool Domain::is_single_box() const {
  return (kind_ == DomainKind::interval || kind_ == DomainKind::box_union) && boxes_.size() == 1;
}

Rational exact_volume(const Domain& d) {
  switch (d.kind()) {
    case DomainKind::interval:
    case DomainKind::box_union: {
      Rational v = 0;
      for (const auto& b : d.boxes()) v += b.volume();
      return v;
    }
    case DomainKind::grid_mask: {
      Rational cell = 1;
      for (std::size_t i = 0; i < d.dimension(); ++i) cell *= d.mask().spacing;
      return cell * Rational(d.mask().cell_count());
    }
    case DomainKind::torus: {
      Rational v = 1;
      for (const auto& l : d.periods()) v *= l;
      return v;
    }
  }
  return 0;
}

double volume(const Domain& d) { return to_double(exact_volume(d)); }

Domain scale_domain(const Domain& d, const Rational& a) {
  if (a <= 0) throw ArgumentError("scale_domain: scale must be positive");
  switch (d.kind()) {
    case DomainKind::interval: {
      const Box& b = d.boxes().front();
      return Domain::interval(b.corner[0] * a, b.upper(0) * a);
    }
    case DomainKind::box_union: {
      std::vector<Box> boxes = d.boxes();
      for (auto& b : boxes) {
        for (auto& c : b.corner) c *= a;
        for (auto& s : b.sides) s *= a;
      }
      return Domain::box_union(std::move(boxes));
    }
    case DomainKind::grid_mask: {
      GridMask m = d.mask();
      for (auto& o : m.origin) o *= a;
      m.spacing *= a;
      return Domain::grid_mask(std::move(m));
    }
    case DomainKind::torus: {
      std::vector<Rational> periods = d.periods();
      for (auto& l : periods) l *= a;
      return Domain::torus(std::move(periods));
    }
  }
  return d;
}

Domain scale_domain(const Domain& d, double a) {
  if (!(a > 0)) throw ArgumentError("scale_domain: scale must be positive");
  return scale_domain(d, to_rational(a));
}

Domain translate_domain(const Domain& d, const std::vector<Rational>& offset) {
  if (offset.size() != d.dimension()) throw ArgumentError("translate_domain: offset dimension mismatch");
  if (d.kind() == DomainKind::interval) {
    const Box& b = d.boxes().front();
    return Domain::interval(b.corner[0] + offset[0], b.upper(0) + offset[0]);
  }
  std::vector<Box> boxes = d.boxes();
  for (auto& b : boxes) {
    for (std::size_t i = 0; i < b.dimension(); ++i) b.corner[i] += offset[i];
  }
  return Domain::box_union(std::move(boxes));
}

Box bounding_box(const Domain& d) {
  if (d.kind() == DomainKind::grid_mask) {
    const GridMask& m = d.mask();
    Box b{m.origin, {}};
    for (auto s : m.shape) b.sides.push_back(m.spacing * Rational(s));
    return b;
  }
  const auto& boxes = d.boxes();
  std::vector<Rational> lo = boxes.front().corner;
  std::vector<Rational> hi(d.dimension());
  for (std::size_t i = 0; i < d.dimension(); ++i) hi[i] = boxes.front().upper(i);
  for (const auto& b : boxes) {
    for (std::size_t i = 0; i < d.dimension(); ++i) {
      lo[i] = std::min(lo[i], b.corner[i]);
      hi[i] = std::max(hi[i], b.upper(i));
    }
  }
  Box out{lo, {}};
  for (std::size_t i = 0; i < d.dimension(); ++i) out.sides.push_back(hi[i] - lo[i]);
  return out;
}

bool contains_point(const Domain& d, const std::vector<Rational>& x) {
  if (x.size() != d.dimension()) throw ArgumentError("contains_point: dimension mismatch");
  if (d.kind() == DomainKind::torus) return true;
  if (d.kind() == DomainKind::grid_mask) {
    const GridMask& m = d.mask();
    std::size_t flat = 0;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      const Rational t = (x[i] - m.origin[i]) / m.spacing;
      if (t < 0) return false;
      auto idx = static_cast<std::size_t>(boost::multiprecision::numerator(t) / boost::multiprecision::denominator(t));
      if (idx >= m.shape[i]) return false;
      flat = flat * m.shape[i] + idx;
    }
    return m.cells[flat] != 0;
  }
  for (const auto& b : d.boxes()) {
    bool inside = true;
    for (std::size_t i = 0; i < b.dimension() && inside; ++i) {
      inside = b.corner[i] <= x[i] && x[i] <= b.upper(i);
    }
    if (inside) return true;
  }
  return false;
}

Domain rasterize(const Domain& d, const Rational& h) {
  if (d.kind() != DomainKind::interval && d.kind() != DomainKind::box_union) {
    throw ArgumentError("rasterize: only interval and box-union domains can be rasterized");
  }
  if (h <= 0) throw ArgumentError("rasterize: spacing must be positive");
  for (const auto& b : d.boxes()) {
    for (const auto& s : b.sides) {
      if (h > s) throw ArgumentError("rasterize: spacing exceeds the smallest box side (degenerate rasterization)");
    }
  }
  const Box bbox = bounding_box(d);
  const std::size_t n = d.dimension();
  GridMask m;
  m.origin = bbox.corner;
  m.spacing = h;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational cells = bbox.sides[i] / h;
    auto count = static_cast<std::size_t>(boost::multiprecision::numerator(cells) /
                                          boost::multiprecision::denominator(cells));
    if (Rational(count) < cells) ++count;
    m.shape.push_back(count);
  }
  m.cells.assign(m.flat_size(), 0);
  std::vector<std::size_t> index(n, 0);
  std::vector<Rational> center(n);
  const Rational half = h / 2;
  for (std::size_t flat = 0; flat < m.cells.size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = n; i-- > 0;) {
      index[i] = rest % m.shape[i];
      rest /= m.shape[i];
    }
    for (std::size_t i = 0; i < n; ++i) center[i] = m.origin[i] + h * Rational(index[i]) + half;
    m.cells[flat] = contains_point(d, center) ? 1 : 0;
  }
  return Domain::grid_mask(std::move(m));
}

Domain rasterize(const Domain& d, double h) {
  if (!(h > 0)) throw ArgumentError("rasterize: spacing must be positive");
  return rasterize(d, to_rational(h));
}

}  // namespace pweyl

#include "pweyl/sweeps.hpp"

#include "pweyl/energy.hpp"
#include "pweyl/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace pweyl {

namespace {

constexpr std::array<double, 3> kExponents{1.5, 2.0, 3.0};

Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

/// One of 1/2, 3/4, 1, 3/2, 2.
Rational random_scale(Philox4x32& rng) {
  static const std::array<Rational, 5> scales{ratio(1, 2), ratio(3, 4), ratio(1, 1), ratio(3, 2), ratio(2, 1)};
  return scales[rng.below(scales.size())];
}

/// Guillotine cuts of `root` into up to `cuts + 1` boxes at multiples of 1/8
/// of the side being cut.
std::vector<Box> guillotine(Philox4x32& rng, Box root, std::size_t cuts) {
  std::vector<Box> boxes{std::move(root)};
  for (std::size_t c = 0; c < cuts; ++c) {
    const std::size_t pick = rng.below(boxes.size());
    const std::size_t axis = rng.below(boxes[pick].dimension());
    const Rational at = boxes[pick].sides[axis] * ratio(static_cast<std::int64_t>(1 + rng.below(7)), 8);
    Box right = boxes[pick];
    boxes[pick].sides[axis] = at;
    right.corner[axis] += at;
    right.sides[axis] -= at;
    boxes.push_back(std::move(right));
  }
  return boxes;
}

/// Shrinks a box to a random sub-box by factors m/8, m ∈ {4..8}, per axis.
Box shrink(Philox4x32& rng, Box b) {
  for (std::size_t axis = 0; axis < b.dimension(); ++axis) {
    const Rational side = b.sides[axis] * ratio(static_cast<std::int64_t>(4 + rng.below(5)), 8);
    const Rational slack = b.sides[axis] - side;
    b.corner[axis] += slack * ratio(static_cast<std::int64_t>(rng.below(9)), 8);
    b.sides[axis] = side;
  }
  return b;
}

/// Expresses a placed box as scale * (box at the origin) + corner.
PackingItem as_item(Philox4x32& rng, const Box& placed) {
  PackingItem item{random_scale(rng), placed.corner, Domain::unit_cube(1)};
  std::vector<Rational> sides;
  for (const auto& s : placed.sides) sides.push_back(s / item.scale);
  const std::vector<Rational> zero(placed.dimension(), Rational(0));
  item.piece = placed.dimension() == 1 ? Domain::interval(Rational(0), sides[0]) : Domain::box(zero, sides);
  return item;
}

Packing random_subpacking(Philox4x32& rng, const Domain& ambient) {
  std::vector<Box> boxes = guillotine(rng, ambient.boxes().front(), rng.below(5));
  Packing pk{PackingRelation::sub, {}, ambient};
  for (auto& b : boxes) {
    if (boxes.size() > 1 && rng.below(4) == 0) continue;  // leave a hole
    pk.items.push_back(as_item(rng, rng.below(2) == 0 ? shrink(rng, b) : b));
  }
  if (pk.items.empty()) pk.items.push_back(as_item(rng, boxes.front()));
  return pk;
}

SweepSummary new_summary(std::string statement, std::uint64_t seed) {
  SweepSummary s;
  s.statement = std::move(statement);
  s.seed = seed;
  return s;
}

std::vector<double> sweep_grid(double top) { return log_grid_points(1.0, top, kSweepGridPoints); }

}  // namespace

void accumulate(SweepSummary& s, std::size_t instance, bool pass, double margin) {
  if (s.instances == 0 || margin < s.worst_margin) s.worst_margin = margin;
  ++s.instances;
  if (!pass) {
    ++s.violations;
    s.failing_instances.push_back(instance);
  }
}

double random_exponent(Philox4x32& rng) { return kExponents[rng.below(kExponents.size())]; }

Packing random_interval_subpacking(Philox4x32& rng) {
  const Rational length = ratio(static_cast<std::int64_t>(2 + rng.below(15)), 4);
  return random_subpacking(rng, Domain::interval(Rational(0), length));
}

Packing random_box_subpacking(Philox4x32& rng) {
  const Rational w = ratio(static_cast<std::int64_t>(4 + rng.below(13)), 8);
  const Rational h = ratio(static_cast<std::int64_t>(4 + rng.below(13)), 8);
  return random_subpacking(rng, Domain::box({0, 0}, {w, h}));
}

Packing random_interval_partition(Philox4x32& rng) {
  const std::size_t cuts = 1 + rng.below(3);
  std::vector<Rational> points{Rational(0), Rational(1)};
  for (std::size_t i = 0; i < cuts; ++i) points.push_back(to_rational(rng.uniform(0.01, 0.99)));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Packing pk{PackingRelation::cover, {}, Domain::interval(0.0, 1.0)};
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    pk.items.push_back(as_item(rng, Box{{points[i]}, {points[i + 1] - points[i]}}));
  }
  return pk;
}

SweepSummary sweep_ddm_boxes(std::size_t instances, std::uint64_t seed) {
  SweepSummary s = new_summary("ddm-boxes", seed);
  const auto grid = sweep_grid(1e5);
  for (std::size_t i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, i);
    const InequalityReport r = check_dirichlet_monotonicity(random_box_subpacking(rng), 2.0, grid);
    accumulate(s, i, r.pass, r.worst_margin);
  }
  return s;
}

SweepSummary sweep_ddm_intervals(std::size_t instances, std::uint64_t seed) {
  SweepSummary s = new_summary("ddm-intervals", seed);
  const auto grid = sweep_grid(1e6);
  for (std::size_t i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, i);
    const double p = random_exponent(rng);
    const InequalityReport r = check_dirichlet_monotonicity(random_interval_subpacking(rng), p, grid);
    accumulate(s, i, r.pass, r.worst_margin);
  }
  return s;
}

SweepSummary sweep_ndm_intervals(std::size_t instances, std::uint64_t seed) {
  SweepSummary s = new_summary("ndm-intervals", seed);
  const auto grid = sweep_grid(1e6);
  for (std::size_t i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, i);
    const double p = random_exponent(rng);
    const InequalityReport r = check_neumann_monotonicity(random_interval_partition(rng), p, grid);
    accumulate(s, i, r.pass, r.worst_margin);
  }
  return s;
}

SweepSummary sweep_ndm_cubes(const std::vector<int>& ks) {
  SweepSummary s = new_summary("ndm-cubes", 0);
  const auto grid = sweep_grid(1e5);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const InequalityReport r = check_neumann_monotonicity(partition_cubes(Domain::unit_cube(2), ks[i]), 2.0, grid);
    accumulate(s, i, r.pass, r.worst_margin);
  }
  return s;
}

SweepSummary sweep_scaling(std::size_t instances, std::uint64_t seed) {
  SweepSummary s = new_summary("scaling", seed);
  const auto grid = sweep_grid(1e5);
  for (std::size_t i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, i);
    const double a = std::exp(rng.uniform(std::log(0.25), std::log(4.0)));
    const double w = rng.uniform(0.5, 2.0);
    const double h = rng.uniform(0.5, 2.0);
    const BoundaryCondition bc = rng.below(2) == 0 ? BoundaryCondition::dirichlet : BoundaryCondition::neumann;
    InequalityReport r;
    switch (rng.below(3)) {
      case 0:
        r = check_scaling(Domain::interval(0.0, w), random_exponent(rng), bc, a, grid);
        break;
      case 1:
        r = check_scaling(Domain::box({0, 0}, {to_rational(w), to_rational(h)}), 2.0, bc, a, grid);
        break;
      default:
        r = check_scaling(Domain::torus({to_rational(w), to_rational(h)}), 2.0, BoundaryCondition::periodic, a, grid);
        break;
    }
    accumulate(s, i, r.pass, r.worst_margin);
  }
  return s;
}

SweepSummary sweep_cutoff(std::size_t instances, std::uint64_t seed) {
  SweepSummary s = new_summary("cutoff", seed);
  const Domain unit = Domain::interval(0.0, 1.0);
  for (std::size_t i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, i);
    const double p = random_exponent(rng);
    const double eps = rng.uniform(0.005, 0.495);
    const double lambda_prime = std::exp(rng.uniform(0.0, std::log(1e3)));
    const double lambda_double_prime = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
    const InequalityReport r = check_cutoff_inequality(unit, p, eps, lambda_prime, lambda_double_prime);
    accumulate(s, i, r.pass, r.worst_margin);
  }
  return s;
}

namespace {

/// A Dirichlet or Neumann space on the unit interval or unit square with a
/// random resolution.
GridSpacePtr random_space(Philox4x32& rng, BoundaryCondition bc) {
  if (rng.below(2) == 0) {
    const auto cells = static_cast<std::int64_t>(8 + rng.below(57));
    return GridSpace::from_domain(Domain::interval(0.0, 1.0), 1.0 / static_cast<double>(cells), bc);
  }
  const auto cells = static_cast<std::int64_t>(4 + rng.below(13));
  return GridSpace::from_domain(Domain::unit_cube(2), 1.0 / static_cast<double>(cells), bc);
}

std::vector<double> random_values(Philox4x32& rng, std::size_t n) {
  std::vector<double> v(n);
  const bool positive = rng.below(3) == 0;
  for (auto& x : v) x = positive ? rng.uniform(0.05, 1.0) : rng.uniform(-1.0, 1.0);
  return v;
}

/// Splits the active lattice points at axis-0 index `cut`: points below go
/// to the first set, points above `cut + gap - 1` to the second.
std::pair<GridSpacePtr, GridSpacePtr> split_space(const GridSpace& s, std::size_t cut, std::size_t gap) {
  std::vector<std::uint8_t> left(s.lattice_size(), 0);
  std::vector<std::uint8_t> right(s.lattice_size(), 0);
  for (std::size_t node = 0; node < s.node_count(); ++node) {
    const std::size_t l = s.lattice_index(node);
    const std::size_t x = s.lattice_coordinates(l)[0];
    if (x < cut) left[l] = 1;
    if (x >= cut + gap) right[l] = 1;
  }
  return {s.with_active(std::move(left)), s.with_active(std::move(right))};
}

std::pair<std::size_t, std::size_t> axis0_range(const GridSpace& s) {
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;
  for (std::size_t node = 0; node < s.node_count(); ++node) {
    const std::size_t x = s.lattice_coordinates(s.lattice_index(node))[0];
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {lo, hi};
}

}  // namespace

SweepSummary sweep_energy_split_disjoint(std::size_t instances, std::uint64_t seed, double p) {
  SweepSummary s = new_summary("energy-split-disjoint", seed);
  for (std::size_t i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, i);
    const GridSpacePtr space = random_space(rng, BoundaryCondition::dirichlet);
    const auto [lo, hi] = axis0_range(*space);
    // a one-column gap keeps every difference stencil on one side
    const std::size_t cut = lo + 1 + rng.below(hi - lo - 1);
    const auto [left, right] = split_space(*space, cut, 1);
    const Field v(left, random_values(rng, left->node_count()));
    const Field w(right, random_values(rng, right->node_count()));
    const double ev = p_energy(v, p);
    const double ew = p_energy(w, p);
    const double eu = p_energy(combine_disjoint(v, w), p);
    const double bound = std::max(ev, ew);
    // round-off allowance of a few ulps of the bound
    const double margin = bound - eu + 1e-12 * bound;
    accumulate(s, i, margin >= 0.0, margin);
  }
  return s;
}

SweepSummary sweep_energy_split_restrict(std::size_t instances, std::uint64_t seed, double p) {
  SweepSummary s = new_summary("energy-split-restrict", seed);
  for (std::size_t i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, i);
    const GridSpacePtr space = random_space(rng, BoundaryCondition::neumann);
    const auto [lo, hi] = axis0_range(*space);
    const std::size_t cut = lo + 1 + rng.below(hi - lo);
    const auto [left, right] = split_space(*space, cut, 0);
    const Field u(space, random_values(rng, space->node_count()));
    const double ev = p_energy(restrict_field(u, left), p);
    const double ew = p_energy(restrict_field(u, right), p);
    const double eu = p_energy(u, p);
    const double bound = std::min(ev, ew);
    const double margin = eu - bound + 1e-12 * eu;
    accumulate(s, i, margin >= 0.0, margin);
  }
  return s;
}

namespace {

/// Forward differences of `x` at base point `b` of the energy stencil.
void stencil_differences(const GridSpace& s, std::span<const double> x, std::size_t b, double* d) {
  const auto at = [&](std::int64_t node) { return node < 0 ? 0.0 : x[static_cast<std::size_t>(node)]; };
  const double base = at(s.base_node(b));
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const std::int64_t f = s.forward_node(b, i);
    d[i] = (s.bc() == BoundaryCondition::neumann && f < 0) ? 0.0 : at(f) - base;
  }
}

double norm(const std::vector<double>& d) {
  double sum_sq = 0.0;
  for (double x : d) sum_sq += x * x;
  return std::sqrt(sum_sq);
}

}  // namespace

double gradient_check_error(const Field& u, const Field& v, double p) {
  const Field lap = discrete_p_laplacian(u, p);
  double analytic = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) analytic += lap[i] * v[i];

  // The functional is a sum over base points, so each term is differenced on
  // its own with a step relative to |∇u| / |∇v| there. This keeps the stencil
  // away from the points where |∇(u + tv)|^p is not smooth.
  const GridSpace& s = u.space();
  const std::size_t n = s.dimension();
  const double weight = s.cell_measure() / p;
  const double inv_h = 1.0 / s.spacing();
  std::vector<double> du(n), dv(n), shifted(n);
  const auto term = [&](double t) {
    for (std::size_t i = 0; i < n; ++i) shifted[i] = (du[i] + t * dv[i]) * inv_h;
    return weight * std::pow(norm(shifted), p);
  };
  double numeric = 0.0;
  for (std::size_t b = 0; b < s.base_count(); ++b) {
    stencil_differences(s, u.values(), b, du.data());
    stencil_differences(s, v.values(), b, dv.data());
    const double gu = norm(du);
    const double gv = norm(dv);
    if (gu == 0.0 || gv == 0.0) continue;  // the term's derivative vanishes
    const double t = 1e-3 * gu / gv;
    // fourth-order central difference
    numeric += (-term(2 * t) + 8.0 * term(t) - 8.0 * term(-t) + term(-2 * t)) / (12.0 * t);
  }
  return std::abs(analytic - numeric) / std::max(std::abs(analytic), std::numeric_limits<double>::min());
}

SweepSummary sweep_gradient_consistency(std::size_t instances, std::uint64_t seed, double p) {
  SweepSummary s = new_summary("gradient-consistency", seed);
  for (std::size_t i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, i);
    const BoundaryCondition bc = rng.below(2) == 0 ? BoundaryCondition::dirichlet : BoundaryCondition::neumann;
    const GridSpacePtr space = random_space(rng, bc);
    const Field u(space, random_values(rng, space->node_count()));
    const Field v(space, random_values(rng, space->node_count()));
    const double margin = 1e-6 - gradient_check_error(u, v, p);
    accumulate(s, i, margin >= 0.0, margin);
  }
  return s;
}

}  // namespace pweyl

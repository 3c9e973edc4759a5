#include "pweyl/energy.hpp"

#include "pweyl/errors.hpp"
#include "pweyl/numeric.hpp"

#include <cmath>
#include <string>

namespace pweyl {

namespace {

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ArgumentError("p must lie in (1, inf), got " + std::to_string(p));
}

inline double value_at(std::span<const double> u, std::int64_t node) {
  return node < 0 ? 0.0 : u[static_cast<std::size_t>(node)];
}

/// Squared forward differences at base point b, written into g.
inline double forward_gradient(const GridSpace& s, std::span<const double> u, std::size_t b, double* g) {
  const double inv_h = 1.0 / s.spacing();
  const std::int64_t base = s.base_node(b);
  const double ub = value_at(u, base);
  const bool neumann = s.bc() == BoundaryCondition::neumann;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const std::int64_t f = s.forward_node(b, i);
    g[i] = (neumann && f < 0) ? 0.0 : (value_at(u, f) - ub) * inv_h;
    sum_sq += g[i] * g[i];
  }
  return sum_sq;
}

}  // namespace

double gradient_power_sum(const Field& u, double p) {
  require_p(p);
  const GridSpace& s = u.space();
  const auto values = u.values();
  std::vector<double> g(s.dimension());
  const double half_p = 0.5 * p;
  double total = 0.0;
  for (std::size_t b = 0; b < s.base_count(); ++b) {
    total += pow_nonneg(forward_gradient(s, values, b, g.data()), half_p);
  }
  return total * s.cell_measure();
}

double lp_power_sum(const Field& u, double p) {
  require_p(p);
  double total = 0.0;
  for (double x : u.values()) total += pow_nonneg(std::abs(x), p);
  return total * u.space().cell_measure();
}

double p_energy(const Field& u, double p) {
  const double denominator = lp_power_sum(u, p);
  if (denominator == 0.0) throw DomainError("p_energy: field is identically zero");
  return gradient_power_sum(u, p) / denominator;
}

Field normalize(const Field& u, NormalizationMode mode, double p) {
  require_p(p);
  if (u.is_zero()) throw DomainError("normalize: field is identically zero");
  const double gradient = gradient_power_sum(u, p);
  double norm = 0.0;
  if (mode == NormalizationMode::gradient_lp) {
    if (gradient == 0.0) throw DomainError("normalize: constant field has zero gradient norm");
    norm = std::pow(gradient, 1.0 / p);
  } else {
    norm = std::pow(gradient + lp_power_sum(u, p), 1.0 / p);
  }
  return u.scaled(1.0 / norm);
}

Field discrete_p_laplacian(const Field& u, double p) {
  require_p(p);
  const GridSpace& s = u.space();
  const auto values = u.values();
  const std::size_t n = s.dimension();
  std::vector<double> out(u.size(), 0.0);
  std::vector<double> g(n);
  const double exponent = 0.5 * (p - 2.0);
  const double delta_sq = p < 2.0 ? kGradientRegularization * kGradientRegularization : 0.0;
  const double scale = s.cell_measure() / s.spacing();
  const bool neumann = s.bc() == BoundaryCondition::neumann;
  for (std::size_t b = 0; b < s.base_count(); ++b) {
    const double sum_sq = forward_gradient(s, values, b, g.data());
    if (sum_sq == 0.0 && p >= 2.0) continue;
    const double weight = pow_nonneg(sum_sq + delta_sq, exponent) * scale;
    const std::int64_t base = s.base_node(b);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t f = s.forward_node(b, i);
      if (neumann && f < 0) continue;
      const double c = weight * g[i];
      if (f >= 0) out[static_cast<std::size_t>(f)] += c;
      if (base >= 0) out[static_cast<std::size_t>(base)] -= c;
    }
  }
  return Field(u.space_ptr(), std::move(out));
}

Field combine_disjoint(const Field& v, const Field& w) {
  const GridSpace& sv = v.space();
  const GridSpace& sw = w.space();
  if (!sv.same_lattice(sw)) throw ArgumentError("combine_disjoint: fields live on different lattices");
  if (v.is_zero() && w.is_zero()) throw ArgumentError("combine_disjoint: both fields vanish");
  const auto& av = sv.active_mask();
  const auto& aw = sw.active_mask();
  std::vector<std::uint8_t> active(av.size(), 0);
  for (std::size_t l = 0; l < av.size(); ++l) {
    if (av[l] && aw[l]) throw ArgumentError("combine_disjoint: supports overlap");
    active[l] = av[l] | aw[l];
  }
  GridSpacePtr joint = sv.with_active(std::move(active));
  // No difference stencil may see both supports, otherwise the energies interact.
  for (std::size_t b = 0; b < joint->base_count(); ++b) {
    const std::size_t l = joint->base_lattice_index(b);
    bool sees_v = av[l] != 0;
    bool sees_w = aw[l] != 0;
    for (std::size_t axis = 0; axis < joint->dimension(); ++axis) {
      const std::int64_t f = joint->forward_node(b, axis);
      if (f < 0) continue;
      const std::size_t fl = joint->lattice_index(static_cast<std::size_t>(f));
      sees_v = sees_v || av[fl] != 0;
      sees_w = sees_w || aw[fl] != 0;
    }
    if (sees_v && sees_w) throw ArgumentError("combine_disjoint: supports are adjacent");
  }
  std::vector<double> values(joint->node_count(), 0.0);
  for (std::size_t node = 0; node < sv.node_count(); ++node) {
    values[static_cast<std::size_t>(joint->node_at(sv.lattice_index(node)))] = v[node];
  }
  for (std::size_t node = 0; node < sw.node_count(); ++node) {
    values[static_cast<std::size_t>(joint->node_at(sw.lattice_index(node)))] = w[node];
  }
  return Field(std::move(joint), std::move(values));
}

Field restrict_field(const Field& u, const GridSpacePtr& sub) {
  const GridSpace& su = u.space();
  if (!su.same_lattice(*sub)) throw ArgumentError("restrict_field: subdomain lives on a different lattice");
  std::vector<double> values(sub->node_count());
  for (std::size_t node = 0; node < sub->node_count(); ++node) {
    const std::int64_t src = su.node_at(sub->lattice_index(node));
    if (src < 0) throw ArgumentError("restrict_field: subdomain is not contained in the field's domain");
    values[node] = u[static_cast<std::size_t>(src)];
  }
  return Field(sub, std::move(values));
}

}  // namespace pweyl

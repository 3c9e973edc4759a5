#include "pweyl/exact.hpp"

#include "pweyl/errors.hpp"
#include "pweyl/numeric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace pweyl {

namespace {

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ArgumentError("p must lie in (1, inf), got " + std::to_string(p));
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ArgumentError(std::string(what) + " must be positive and finite");
}

/// Number of sign changes of u on (0, L] for the shooting problem at λ,
/// stopping early once `stop_at` zeros have been seen.
std::size_t count_zeros(double p, double length, double lambda, std::size_t stop_at, std::size_t steps) {
  const double h = length / static_cast<double>(steps);
  const double flux_exponent = 1.0 / (p - 1.0);
  const double source_exponent = p - 1.0;
  const auto du = [&](double phi) { return signed_pow(phi, flux_exponent); };
  const auto dphi = [&](double u) { return -lambda * signed_pow(u, source_exponent); };

  double u = 0.0;
  double phi = 1.0;
  int sign = 1;
  std::size_t zeros = 0;
  for (std::size_t step = 0; step < steps; ++step) {
    const double k1u = du(phi);
    const double k1p = dphi(u);
    const double k2u = du(phi + 0.5 * h * k1p);
    const double k2p = dphi(u + 0.5 * h * k1u);
    const double k3u = du(phi + 0.5 * h * k2p);
    const double k3p = dphi(u + 0.5 * h * k2u);
    const double k4u = du(phi + h * k3p);
    const double k4p = dphi(u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    phi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    if (!std::isfinite(u) || !std::isfinite(phi)) {
      std::ostringstream msg;
      msg << "shooting: non-finite state at x = " << h * static_cast<double>(step + 1) << " (p = " << p
          << ", lambda = " << lambda << ", u = " << u << ", phi = " << phi << ")";
      throw SolverError(msg.str());
    }
    if ((sign > 0 && u < 0.0) || (sign < 0 && u > 0.0)) {
      sign = -sign;
      if (++zeros >= stop_at) return zeros;
    }
  }
  return zeros;
}

}  // namespace

double pi_p(double p) {
  require_p(p);
  return 2.0 * std::numbers::pi / (p * std::sin(std::numbers::pi / p));
}

double weyl_constant_1d(double p) { return std::pow(p - 1.0, -1.0 / p) / pi_p(p); }

std::optional<double> weyl_constant(std::size_t dimension, double p) {
  require_p(p);
  if (dimension == 0) throw ArgumentError("weyl_constant: dimension must be positive");
  if (dimension == 1) return weyl_constant_1d(p);
  if (p != 2.0) return std::nullopt;
  // volume of the unit ball over (2π)^n
  const double n = static_cast<double>(dimension);
  const double ball = std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
  return ball / std::pow(2.0 * std::numbers::pi, n);
}

double shooting_eigenvalue_1d(double p, double length, std::size_t k, const ShootingOptions& options) {
  require_p(p);
  require_positive(length, "length");
  if (k < 1) throw ArgumentError("shooting_eigenvalue_1d: index k must be >= 1");
  if (options.steps < 10) throw ArgumentError("shooting_eigenvalue_1d: too few integration steps");

  // Bracket: count(lo) < k <= count(hi).
  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (count_zeros(p, length, hi, k, options.steps) < k) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 2000) throw SolverError("shooting_eigenvalue_1d: failed to bracket the eigenvalue");
  }
  while (hi - lo > options.relative_width * hi) {
    const double mid = 0.5 * (lo + hi);
    if (count_zeros(p, length, mid, k, options.steps) >= k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Spectrum spectrum_1d(double p, double length, BoundaryCondition bc, double lambda_max) {
  require_p(p);
  require_positive(length, "length");
  require_positive(lambda_max, "lambda_max");
  if (bc == BoundaryCondition::periodic) throw UnsupportedError("spectrum_1d: use torus_spectrum_p2 for periodic");
  Spectrum s;
  s.p = p;
  s.bc = bc;
  s.dimension = 1;
  s.domain_volume = length;
  s.exactness = Exactness::exact;
  s.complete_below = lambda_max;
  const double base = pi_p(p) / length;
  for (std::size_t k = bc == BoundaryCondition::dirichlet ? 1 : 0;; ++k) {
    const double value = (p - 1.0) * std::pow(static_cast<double>(k) * base, p);
    if (!(value < lambda_max)) break;
    s.eigenvalues.push_back(Eigenvalue{value, 1});
  }
  return s;
}

namespace {

/// Enumerates Σ_i scale (k_i / L_i)² < lambda_max over k_i in the given range.
class LatticeEnumerator {
 public:
  LatticeEnumerator(const std::vector<double>& lengths, double scale, double lambda_max, bool symmetric,
                    long min_index, std::size_t cap)
      : lengths_(lengths), scale_(scale), lambda_max_(lambda_max), symmetric_(symmetric), min_index_(min_index),
        cap_(cap) {}

  std::vector<double> run() {
    values_.clear();
    recurse(0, 0.0);
    return std::move(values_);
  }

 private:
  void recurse(std::size_t axis, double partial) {
    if (axis == lengths_.size()) {
      if (++visited_ > cap_) {
        throw ResourceError("lattice enumeration exceeds the cap of " + std::to_string(cap_) + " points");
      }
      values_.push_back(partial);
      return;
    }
    const double unit = scale_ / (lengths_[axis] * lengths_[axis]);
    const auto visit = [&](long k) {
      const double term = unit * static_cast<double>(k) * static_cast<double>(k);
      if (!(partial + term < lambda_max_)) return false;
      recurse(axis + 1, partial + term);
      return true;
    };
    if (symmetric_) {
      if (!visit(0)) return;
      for (long k = 1; visit(k) && visit(-k); ++k) {
      }
    } else {
      for (long k = min_index_; visit(k); ++k) {
      }
    }
  }

  const std::vector<double>& lengths_;
  double scale_;
  double lambda_max_;
  bool symmetric_;
  long min_index_;
  std::size_t cap_;
  std::size_t visited_ = 0;
  std::vector<double> values_;
};

Spectrum lattice_spectrum(const std::vector<double>& lengths, BoundaryCondition bc, double lambda_max,
                          std::size_t cap) {
  if (lengths.empty()) throw ArgumentError("lattice spectrum needs at least one side length");
  double volume = 1.0;
  for (double l : lengths) {
    require_positive(l, "side length");
    volume *= l;
  }
  require_positive(lambda_max, "lambda_max");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const bool periodic = bc == BoundaryCondition::periodic;
  LatticeEnumerator enumerator(lengths, periodic ? 4.0 * pi2 : pi2, lambda_max, periodic,
                               bc == BoundaryCondition::dirichlet ? 1 : 0, cap);
  Spectrum s;
  s.eigenvalues = merge_eigenvalues(enumerator.run());
  s.p = 2.0;
  s.bc = bc;
  s.dimension = lengths.size();
  s.domain_volume = volume;
  s.exactness = Exactness::exact;
  s.complete_below = lambda_max;
  return s;
}

}  // namespace

Spectrum box_spectrum_p2(const std::vector<double>& sides, BoundaryCondition bc, double lambda_max,
                         std::size_t lattice_cap) {
  if (bc == BoundaryCondition::periodic) throw ArgumentError("box_spectrum_p2: use torus_spectrum_p2 for periodic");
  return lattice_spectrum(sides, bc, lambda_max, lattice_cap);
}

Spectrum torus_spectrum_p2(const std::vector<double>& periods, double lambda_max, std::size_t lattice_cap) {
  return lattice_spectrum(periods, BoundaryCondition::periodic, lambda_max, lattice_cap);
}

Spectrum exact_spectrum(const Domain& d, double p, BoundaryCondition bc, double lambda_max) {
  require_p(p);
  switch (d.kind()) {
    case DomainKind::torus:
      if (p != 2.0) throw UnsupportedError("exact torus spectra are available for p = 2 only");
      return torus_spectrum_p2(to_double(d.periods()), lambda_max);
    case DomainKind::interval:
    case DomainKind::box_union: {
      if (!d.is_single_box()) {
        throw UnsupportedError("no exact spectrum for a union of several boxes; use a discrete solver");
      }
      const std::vector<double> sides = to_double(d.boxes().front().sides);
      if (sides.size() == 1) return spectrum_1d(p, sides.front(), bc, lambda_max);
      if (p != 2.0) throw UnsupportedError("exact box spectra in dimension >= 2 are available for p = 2 only");
      return box_spectrum_p2(sides, bc, lambda_max);
    }
    case DomainKind::grid_mask:
      break;
  }
  throw UnsupportedError("no exact spectrum for grid-mask domains; use a discrete solver");
}

}  // namespace pweyl

#include "pweyl/counting.hpp"
#include "pweyl/errors.hpp"
#include "pweyl/exact.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace pweyl;

namespace {

constexpr double kPi = std::numbers::pi;

/// π_p as 2∫₀¹ (1 - t^p)^{-1/p} dt, independent of the closed form.
double pi_p_by_quadrature(double p) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return 2.0 * integrator.integrate([p](double t, double tc) {
    const double one_minus = t > 0.5 ? -std::expm1(p * std::log1p(-tc)) : 1.0 - std::pow(t, p);
    return std::pow(one_minus, -1.0 / p);
  }, 0.0, 1.0);
}

}  // namespace

TEST_CASE("pi_p against quadrature") {
  for (double p : {1.5, 2.0, 2.5, 3.0, 4.0, 7.0}) CHECK(pi_p(p) == doctest::Approx(pi_p_by_quadrature(p)).epsilon(1e-10));
  CHECK(pi_p(2.0) == doctest::Approx(kPi).epsilon(1e-15));
  // frozen
  CHECK(pi_p(1.5) == doctest::Approx(4.8367983046245809).epsilon(1e-14));
  CHECK(pi_p(3.0) == doctest::Approx(2.4183991523122905).epsilon(1e-14));
  CHECK(pi_p(4.0) == doctest::Approx(2.2214414690791831).epsilon(1e-14));
  CHECK(2.0 * std::pow(pi_p(3.0), 3) == doctest::Approx(28.288761976002555).epsilon(1e-13));
  CHECK_THROWS_AS(pi_p(1.0), ArgumentError);
}

TEST_CASE("pi_p decreases towards 2") {
  double previous = pi_p(1.05);
  for (double p = 1.1; p < 50.0; p *= 1.1) {
    const double v = pi_p(p);
    CHECK(v < previous);
    CHECK(v > 2.0);
    previous = v;
  }
}

TEST_CASE("Weyl constants") {
  CHECK(weyl_constant_1d(2.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(weyl_constant_1d(3.0) == doctest::Approx(0.3281925257148818).epsilon(1e-13));
  CHECK(weyl_constant_1d(4.0) == doctest::Approx(0.34204623269527533).epsilon(1e-13));
  CHECK(*weyl_constant(2, 2.0) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-15));
  CHECK(*weyl_constant(3, 2.0) == doctest::Approx(1.0 / (6.0 * kPi * kPi)).epsilon(1e-14));
  CHECK(*weyl_constant(1, 3.0) == weyl_constant_1d(3.0));
  CHECK_FALSE(weyl_constant(2, 3.0).has_value());
}

TEST_CASE("one-dimensional spectra") {
  const Spectrum d = spectrum_1d(2.0, 1.0, BoundaryCondition::dirichlet, 100.0);
  REQUIRE(d.eigenvalues.size() == 3);
  CHECK(d.eigenvalues[0].value == doctest::Approx(kPi * kPi));
  CHECK(d.eigenvalues[2].value == doctest::Approx(9 * kPi * kPi));
  CHECK(d.exactness == Exactness::exact);

  const Spectrum n = spectrum_1d(2.0, 1.0, BoundaryCondition::neumann, 100.0);
  REQUIRE(n.eigenvalues.size() == 4);
  CHECK(n.eigenvalues[0].value == 0.0);

  const Spectrum p3 = spectrum_1d(3.0, 1.0, BoundaryCondition::dirichlet, 300.0);
  REQUIRE(p3.eigenvalues.size() == 2);
  CHECK(p3.eigenvalues[0].value == doctest::Approx(28.288761976002555).epsilon(1e-13));
  CHECK(p3.eigenvalues[1].value == doctest::Approx(8 * 28.288761976002555).epsilon(1e-13));

  const Spectrum longer = spectrum_1d(2.0, 2.0, BoundaryCondition::dirichlet, 9.0);
  REQUIRE(longer.eigenvalues.size() == 1);
  CHECK(longer.eigenvalues[0].value == doctest::Approx(kPi * kPi / 4));
  CHECK_THROWS_AS(spectrum_1d(2.0, 1.0, BoundaryCondition::periodic, 10.0), UnsupportedError);
}

TEST_CASE("shooting matches the closed form") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (std::size_t k : {1u, 3u}) {
      const double closed = (p - 1.0) * std::pow(static_cast<double>(k) * pi_p(p), p);
      CHECK(shooting_eigenvalue_1d(p, 1.0, k) == doctest::Approx(closed).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(shooting_eigenvalue_1d(2.0, 1.0, 0), ArgumentError);
}

TEST_CASE("box and torus spectra") {
  const Spectrum sq = box_spectrum_p2({1.0, 1.0}, BoundaryCondition::dirichlet, 100.0);
  REQUIRE(sq.eigenvalues.size() == 4);
  CHECK(sq.eigenvalues[0].value == doctest::Approx(2 * kPi * kPi));
  CHECK(sq.eigenvalues[0].multiplicity == 1);
  CHECK(sq.eigenvalues[1].value == doctest::Approx(5 * kPi * kPi));
  CHECK(sq.eigenvalues[1].multiplicity == 2);
  CHECK(sq.eigenvalues[2].multiplicity == 1);
  CHECK(sq.eigenvalues[3].value == doctest::Approx(10 * kPi * kPi));
  CHECK(sq.eigenvalues[3].multiplicity == 2);
  CHECK(sq.complete_below == 100.0);

  const Spectrum nsq = box_spectrum_p2({1.0, 1.0}, BoundaryCondition::neumann, 11.0);
  REQUIRE(nsq.eigenvalues.size() == 2);
  CHECK(nsq.eigenvalues[0].value == 0.0);
  CHECK(nsq.eigenvalues[1].multiplicity == 2);

  const Spectrum t = torus_spectrum_p2({1.0, 1.0}, 40.0);
  REQUIRE(t.eigenvalues.size() == 2);
  CHECK(t.eigenvalues[0].value == 0.0);
  CHECK(t.eigenvalues[1].value == doctest::Approx(4 * kPi * kPi));
  CHECK(t.eigenvalues[1].multiplicity == 4);
  CHECK(t.bc == BoundaryCondition::periodic);

  CHECK_THROWS_AS(box_spectrum_p2({1.0, 1.0, 1.0}, BoundaryCondition::dirichlet, 1e9, 1000), ResourceError);
}

TEST_CASE("exact dispatch") {
  CHECK(exact_spectrum(Domain::interval(0.0, 1.0), 3.0, BoundaryCondition::dirichlet, 300.0).eigenvalues.size() == 2);
  CHECK(exact_spectrum(Domain::unit_cube(2), 2.0, BoundaryCondition::dirichlet, 100.0).total_multiplicity() == 6);
  CHECK(exact_spectrum(Domain::torus({Rational(1)}), 2.0, BoundaryCondition::periodic, 40.0).total_multiplicity() == 3);
  const Domain l = Domain::box_union({Box{{0, 0}, {2, 1}}, Box{{0, 1}, {1, 1}}});
  CHECK_THROWS_AS(exact_spectrum(l, 2.0, BoundaryCondition::dirichlet, 100.0), UnsupportedError);
  CHECK_THROWS_AS(exact_spectrum(Domain::unit_cube(2), 3.0, BoundaryCondition::dirichlet, 100.0), UnsupportedError);
  CHECK_THROWS_AS(exact_spectrum(rasterize(l, Rational(1, 4)), 2.0, BoundaryCondition::dirichlet, 100.0), UnsupportedError);
}

TEST_CASE("1D counting oracle") {
  const Spectrum s = spectrum_1d(2.0, 1.0, BoundaryCondition::dirichlet, 1e6);
  for (double lambda : {1.0, 9.0, 10.0, 39.5, 40.0, 1000.0, 123456.0, 999999.0}) {
    const auto expected = static_cast<std::size_t>(std::floor(std::sqrt(lambda) / kPi));
    CHECK(count(s, lambda) == expected);
  }
}

TEST_CASE("spectra are validated") {
  Spectrum s;
  s.eigenvalues = {{2.0, 1}, {1.0, 1}};
  CHECK_THROWS_AS(validate_spectrum(s), ValidationError);
  s.eigenvalues = {{1.0, 0}};
  CHECK_THROWS_AS(validate_spectrum(s), ValidationError);
  const auto merged = merge_eigenvalues({3.0, 1.0, 1.0 + 1e-12, 2.0});
  REQUIRE(merged.size() == 3);
  CHECK(merged[0].multiplicity == 2);
}

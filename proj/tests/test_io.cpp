#include "pweyl/errors.hpp"
#include "pweyl/exact.hpp"
#include "pweyl/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace pweyl;

namespace {

template <class T, class Read>
void json_round_trip(const T& value, Read read) {
  const Json j = to_json(value);
  const T back = read(Json::parse(dump(j)));
  CHECK(back == value);
  CHECK(dump(to_json(back)) == dump(j));
}

}  // namespace

TEST_CASE("shortest double formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(3.0) == "3");
  const double x = 0.31830988618379067;
  CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("rationals in JSON") {
  CHECK(rational_to_json(Rational(3)) == Json(3));
  CHECK(rational_to_json(Rational(1, 3)) == Json("1/3"));
  CHECK(rational_from_json(Json(0.1)) == Rational(1, 10));
  CHECK(rational_from_json(Json("0.25")) == Rational(1, 4));
  CHECK(rational_from_json(Json(-2)) == Rational(-2));
  CHECK_THROWS_AS(rational_from_json(Json::array()), ValidationError);
}

TEST_CASE("domain round trips") {
  json_round_trip(Domain::interval(0.0, 2.5), domain_from_json);
  json_round_trip(Domain::box_union({Box{{0, 0}, {2, 1}}, Box{{0, 1}, {1, Rational(1, 3)}}}), domain_from_json);
  json_round_trip(rasterize(Domain::unit_cube(2), Rational(1, 4)), domain_from_json);
  json_round_trip(Domain::torus({Rational(1), Rational(7, 2)}), domain_from_json);
  CHECK(to_json(Domain::interval(0.0, 1.0)).at("kind") == "interval");
  CHECK_THROWS_AS(domain_from_json(Json::parse(R"({"kind":"sphere"})")), ValidationError);
  CHECK_THROWS_AS(domain_from_json(Json::parse(R"({"kind":"box-union","n":2,"boxes":[{"corner":[0,0],"sides":[1,0]}]})")),
                  ValidationError);
}

TEST_CASE("packing round trip") {
  const Packing pk = partition_cubes(Domain::box_union({Box{{0, 0}, {2, 1}}, Box{{0, 1}, {1, 1}}}), 2);
  const Packing back = packing_from_json(Json::parse(dump(to_json(pk))));
  CHECK(back.relation == pk.relation);
  CHECK(back.ambient == pk.ambient);
  REQUIRE(back.items.size() == pk.items.size());
  for (std::size_t i = 0; i < pk.items.size(); ++i) {
    CHECK(back.items[i].scale == pk.items[i].scale);
    CHECK(back.items[i].offset == pk.items[i].offset);
    CHECK(back.items[i].piece == pk.items[i].piece);
  }
}

TEST_CASE("spectrum round trips") {
  const Spectrum exact = box_spectrum_p2({1.0, 2.0}, BoundaryCondition::neumann, 500.0);
  json_round_trip(exact, spectrum_from_json);
  Spectrum unbounded = exact;
  unbounded.complete_below = std::numeric_limits<double>::infinity();
  CHECK(to_json(unbounded).at("complete_below").is_null());
  json_round_trip(unbounded, spectrum_from_json);

  Spectrum discrete = exact;
  discrete.exactness = Exactness::discrete;
  discrete.complete_below = 123.5;
  discrete.solver = SolverInfo{"fd-dsbevd", 0.0625, 0.0, 0};
  json_round_trip(discrete, spectrum_from_json);

  std::stringstream csv;
  write_spectrum_csv(csv, exact);
  CHECK(read_spectrum_csv(csv, exact) == exact);
  std::stringstream bad("v,m\n1,1\n");
  CHECK_THROWS_AS(read_spectrum_csv(bad, exact), ValidationError);
}

TEST_CASE("curve, estimate and report round trips") {
  const Spectrum s = spectrum_1d(3.0, 1.0, BoundaryCondition::dirichlet, 1e6);
  const CountingCurve c = counting_curve(s, log_grid(1.0, 1e6));
  json_round_trip(c, curve_from_json);
  std::stringstream csv;
  write_curve_csv(csv, c);
  const CountingCurve back = read_curve_csv(csv, c.dimension, c.p, c.bc, c.domain_volume);
  CHECK(back.lambdas == c.lambdas);
  CHECK(back.counts == c.counts);

  json_round_trip(estimate_weyl_constant(c), weyl_estimate_from_json);
  json_round_trip(check_friedlander_bounds(c), report_from_json);
  json_round_trip(check_scaling(Domain::interval(0.0, 1.0), 2.0, BoundaryCondition::dirichlet, 2.0, log_grid(1.0, 1e3)),
                  report_from_json);

  SweepSummary sweep;
  sweep.statement = "ddm";
  sweep.seed = 7;
  sweep.instances = 3;
  sweep.violations = 1;
  sweep.worst_margin = -2;
  sweep.failing_instances = {1};
  json_round_trip(sweep, sweep_from_json);
}

TEST_CASE("field formats") {
  const auto space = GridSpace::from_domain(Domain::unit_cube(2), 0.25, BoundaryCondition::neumann);
  const Field u = Field::from_function(space, [](std::span<const double> x) { return x[0] - 3 * x[1] + 0.1; });
  std::stringstream bin;
  write_field_binary(bin, u);
  CHECK(bin.str().size() == 8 * u.size());
  CHECK(read_field_binary(bin) == std::vector<double>(u.values().begin(), u.values().end()));
  std::stringstream csv;
  write_field_csv(csv, u);
  CHECK(read_field_csv(csv) == std::vector<double>(u.values().begin(), u.values().end()));
  std::stringstream partial(std::string(12, '\0'));
  CHECK_THROWS_AS(read_field_binary(partial), ValidationError);
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/x.json"), ArgumentError);
  CHECK(dump(Json::parse(R"({"a":1})")) == "{\n  \"a\": 1\n}\n");
}

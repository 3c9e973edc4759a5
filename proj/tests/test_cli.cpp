#include "pweyl/io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <sys/wait.h>

using namespace pweyl;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

const std::string kDomains = PWEYL_DOMAINS;

std::string domain(const std::string& name) { return kDomains + "/" + name + ".json"; }

Run run_cli(const std::string& args) {
  static int counter = 0;
  const std::string stem = "cli_run_" + std::to_string(counter++);
  const std::string command =
      std::string(PWEYL_CLI) + " " + args + " > " + stem + ".out 2> " + stem + ".err";
  const int status = std::system(command.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_text_file(stem + ".out");
  r.err = read_text_file(stem + ".err");
  return r;
}

}  // namespace

TEST_CASE("spectrum of the unit interval") {
  const Run r = run_cli("spectrum --domain " + domain("unit-interval") + " --p 2 --bc dirichlet --lambda-max 100");
  REQUIRE(r.code == 0);
  const Spectrum s = spectrum_from_json(Json::parse(r.out));
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[2].value == doctest::Approx(9 * std::numbers::pi * std::numbers::pi));
  CHECK(dump(to_json(s)) == r.out);
}

TEST_CASE("spectrum of the unit square") {
  const Run r = run_cli("spectrum --domain " + domain("unit-square") + " --p 2 --lambda-max 50");
  REQUIRE(r.code == 0);
  const Spectrum s = spectrum_from_json(Json::parse(r.out));
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(s.eigenvalues[0].value == doctest::Approx(2 * std::numbers::pi * std::numbers::pi));
  CHECK(s.eigenvalues[0].multiplicity == 1);
  CHECK(s.eigenvalues[1].value == doctest::Approx(5 * std::numbers::pi * std::numbers::pi));
  CHECK(s.eigenvalues[1].multiplicity == 2);

  const Run csv = run_cli("spectrum --domain " + domain("unit-square") + " --p 2 --lambda-max 50 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("value,multiplicity\n", 0) == 0);
}

TEST_CASE("spectrum refuses full p != 2 spectra of an L-shape") {
  const Run r = run_cli("spectrum --domain " + domain("lshape") + " --p 3 --lambda-max 100");
  CHECK(r.code == 2);
  CHECK(r.err.find("--first-eigenvalue") != std::string::npos);
}

TEST_CASE("discrete spectrum of the L-shape at p = 2") {
  const Run r = run_cli("spectrum --domain " + domain("lshape") + " --p 2 --lambda-max 200 --spacing 0.125");
  REQUIRE(r.code == 0);
  const Spectrum s = spectrum_from_json(Json::parse(r.out));
  CHECK(s.exactness == Exactness::discrete);
  REQUIRE(s.solver.has_value());
  CHECK(s.solver->spacing == 0.125);
  CHECK(dump(to_json(s)) == r.out);
}

TEST_CASE("weyl estimate and degenerate range") {
  const Run r = run_cli("weyl --domain " + domain("unit-interval") + " --p 2 --lambda-max 1e8 --curve curve.csv");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const WeylEstimate e = weyl_estimate_from_json(j.at("estimate"));
  CHECK(e.c_hat == doctest::Approx(1 / std::numbers::pi).epsilon(1e-3));
  CHECK(dump(to_json(e)) == dump(j.at("estimate")));
  CHECK(r.err.find("c_hat=") != std::string::npos);
  CHECK(read_text_file("curve.csv").rfind("lambda,N,f\n", 0) == 0);

  CHECK(run_cli("weyl --domain " + domain("unit-interval") + " --p 2 --lambda-max 5").code == 3);
}

TEST_CASE("torus Weyl constant per unit volume") {
  const Run r = run_cli("weyl --domain " + domain("torus2") + " --p 2 --bc periodic --lambda-max 1e6");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("estimate").at("c_hat").get<double>() ==
        doctest::Approx(1 / (4 * std::numbers::pi)).epsilon(0.02));
}

TEST_CASE("check sweeps pass and are byte-identical") {
  const Run a = run_cli("check ddm --sweep 100 --seed 7");
  const Run b = run_cli("check ddm --sweep 100 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j.at("verdict") == "pass");
  for (const Json& s : j.at("sweeps")) CHECK(dump(to_json(sweep_from_json(s))) == dump(s));

  CHECK(run_cli("check cutoff --sweep 1000 --seed 1").code == 0);
  CHECK(run_cli("check ndm --sweep 100 --seed 7").code == 0);
  CHECK(run_cli("check energy-split --sweep 50 --seed 3").code == 0);
}

TEST_CASE("single-instance checks") {
  const Run scaling = run_cli("check scaling --a 2 --p 3");
  REQUIRE(scaling.code == 0);
  const InequalityReport r = report_from_json(Json::parse(scaling.out));
  CHECK(r.violations == 0);
  CHECK(dump(to_json(r)) == scaling.out);

  CHECK(run_cli("check cutoff --p 2 --eps 0.1 --lambda-prime 20 --lambda-double-prime 200").code == 0);
  CHECK(run_cli("check friedlander --domain " + domain("unit-square") + " --lambda-min 1 --lambda-max 1e6").code == 0);
}

TEST_CASE("violations exit with 1") {
  const Run r = run_cli("check constant-equality --domain " + domain("unit-square") +
                      " --lambda-min 1e5 --lambda-max 1e6 --tol 1e-4");
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out).at("verdict") == "fail");
  CHECK(run_cli("check constant-equality --domain " + domain("unit-square") +
              " --lambda-min 1e5 --lambda-max 1e6 --tol 0.02").code == 0);
}

TEST_CASE("pack output feeds the monotonicity checks") {
  write_text_file("rect.json", R"({"kind":"box-union","n":2,"boxes":[{"corner":[0,0],"sides":[2,1]}]})");
  write_text_file("strip.json", R"({"kind":"box-union","n":2,"boxes":[{"corner":[0,0],"sides":[1,"1/3"]}]})");
  REQUIRE(run_cli("pack --domain rect.json --eps 0.1 -o sub.json").code == 0);
  REQUIRE(run_cli("pack --domain " + domain("unit-square") + " --partition 3 -o cover.json").code == 0);
  const Packing cover = packing_from_json(read_json_file("cover.json"));
  CHECK(cover.items.size() == 9);
  CHECK(dump(to_json(cover)) == read_text_file("cover.json"));
  CHECK(run_cli("check ddm --packing sub.json --lambda-max 1e4").code == 0);
  CHECK(run_cli("check ndm --packing cover.json --lambda-max 1e4").code == 0);
  CHECK(run_cli("check ndm --packing sub.json --lambda-max 1e4").code == 2);

  REQUIRE(run_cli("pack --domain " + domain("lshape") + " --partition 2 -o lcover.json").code == 0);
  CHECK(packing_from_json(read_json_file("lcover.json")).items.size() == 12);
  // no exact spectrum for the L-shape itself
  CHECK(run_cli("check ndm --packing lcover.json --lambda-max 1e4").code == 2);

  const Run failed = run_cli("pack --domain strip.json --eps 1e-9 --depth 2");
  CHECK(failed.code == 4);
  CHECK(failed.err.find("packing failure") != std::string::npos);
}

TEST_CASE("sandwich on the L-shape") {
  const Run r = run_cli("sandwich --domain " + domain("lshape") + " --lambda-min 1 --lambda-max 1e6");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("ordering").at("verdict") == "pass");
  CHECK(j.at("estimate").at("c_hat").get<double>() == doctest::Approx(1 / (4 * std::numbers::pi)).epsilon(0.03));
}

TEST_CASE("run configurations and flag overrides") {
  const std::string config = std::string(PWEYL_CONFIGS) + "/runs/weyl-square.toml";
  const Run r = run_cli("--config " + config + " weyl --domain " + domain("unit-square"));
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("estimate").at("window")[1].get<double>() == 1e6);
  const Run o = run_cli("--config " + config + " weyl --domain " + domain("unit-square") + " --lambda-max 1e5 --lambda-min 1e3");
  REQUIRE(o.code == 0);
  CHECK(Json::parse(o.out).at("estimate").at("window")[1].get<double>() == 1e5);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("check nonsense").code == 2);
  CHECK(run_cli("spectrum --domain /nonexistent.json --lambda-max 10").code == 2);
  CHECK(run_cli("spectrum --domain " + domain("unit-interval") + " --p 0.5 --lambda-max 10").code == 2);
  CHECK(run_cli("--bogus").code == 2);
}

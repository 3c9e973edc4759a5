#include "pweyl/io.hpp"

#include "pweyl/errors.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace pweyl {

namespace {

template <class T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

Json rationals_to_json(const std::vector<Rational>& xs, bool strings) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(strings ? Json(to_string(x)) : rational_to_json(x));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of coordinates");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

double number_or_infinity(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::vector<double> split_csv_line(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
      throw ValidationError("malformed CSV cell '" + cell + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) {
    const auto& num = numerator(r);
    if (num <= std::numeric_limits<std::int64_t>::max() && num >= std::numeric_limits<std::int64_t>::min()) {
      return Json(num.convert_to<std::int64_t>());
    }
  }
  return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return parse_rational(format_double(j.get<double>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("expected a number or a rational string");
}

Json to_json(const Domain& d) {
  Json j;
  j["kind"] = std::string(to_string(d.kind()));
  switch (d.kind()) {
    case DomainKind::interval: {
      const Box& b = d.boxes().front();
      j["lo"] = rational_to_json(b.corner[0]);
      j["hi"] = rational_to_json(b.upper(0));
      break;
    }
    case DomainKind::box_union: {
      j["n"] = d.dimension();
      Json boxes = Json::array();
      for (const Box& b : d.boxes()) {
        boxes.push_back(Json{{"corner", rationals_to_json(b.corner, false)}, {"sides", rationals_to_json(b.sides, false)}});
      }
      j["boxes"] = std::move(boxes);
      break;
    }
    case DomainKind::grid_mask: {
      const GridMask& m = d.mask();
      j["origin"] = rationals_to_json(m.origin, false);
      j["h"] = rational_to_json(m.spacing);
      j["shape"] = m.shape;
      std::string cells(m.cells.size(), '0');
      for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = m.cells[i] ? '1' : '0';
      j["cells"] = std::move(cells);
      break;
    }
    case DomainKind::torus:
      j["periods"] = rationals_to_json(d.periods(), false);
      break;
  }
  return j;
}

Domain domain_from_json(const Json& j) {
  const auto kind = required<std::string>(j, "kind");
  if (kind == "interval") {
    return Domain::interval(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
  }
  if (kind == "box-union") {
    if (!j.contains("boxes") || !j.at("boxes").is_array()) throw ValidationError("box-union needs a 'boxes' array");
    std::vector<Box> boxes;
    for (const auto& b : j.at("boxes")) {
      if (!b.contains("corner") || !b.contains("sides")) throw ValidationError("box needs 'corner' and 'sides'");
      boxes.push_back(Box{rationals_from_json(b.at("corner")), rationals_from_json(b.at("sides"))});
    }
    Domain d = Domain::box_union(std::move(boxes));
    if (j.contains("n") && j.at("n").get<std::size_t>() != d.dimension()) {
      throw ValidationError("box-union 'n' disagrees with the box dimension");
    }
    return d;
  }
  if (kind == "grid-mask") {
    GridMask m;
    m.origin = rationals_from_json(j.at("origin"));
    m.spacing = rational_from_json(j.at("h"));
    m.shape = required<std::vector<std::size_t>>(j, "shape");
    for (char c : required<std::string>(j, "cells")) {
      if (c != '0' && c != '1') throw ValidationError("grid-mask cells must be a string of 0 and 1");
      m.cells.push_back(c == '1' ? 1 : 0);
    }
    return Domain::grid_mask(std::move(m));
  }
  if (kind == "torus") return Domain::torus(rationals_from_json(j.at("periods")));
  throw ValidationError("unknown domain kind '" + kind + "'");
}

Json to_json(const Packing& pk) {
  Json items = Json::array();
  for (const auto& item : pk.items) {
    items.push_back(Json{{"scale", to_string(item.scale)},
                         {"offset", rationals_to_json(item.offset, true)},
                         {"piece", to_json(item.piece)}});
  }
  return Json{{"relation", std::string(to_string(pk.relation))}, {"ambient", to_json(pk.ambient)}, {"items", items}};
}

Packing packing_from_json(const Json& j) {
  Packing pk{PackingRelation::sub, {}, domain_from_json(j.at("ambient"))};
  const auto relation = required<std::string>(j, "relation");
  if (relation == "sub") {
    pk.relation = PackingRelation::sub;
  } else if (relation == "cover") {
    pk.relation = PackingRelation::cover;
  } else {
    throw ValidationError("unknown packing relation '" + relation + "'");
  }
  for (const auto& item : j.at("items")) {
    pk.items.push_back(PackingItem{rational_from_json(item.at("scale")), rationals_from_json(item.at("offset")),
                                   domain_from_json(item.at("piece"))});
  }
  return pk;
}

Json to_json(const Spectrum& s) {
  Json j;
  j["p"] = s.p;
  j["bc"] = std::string(to_string(s.bc));
  j["exactness"] = std::string(to_string(s.exactness));
  j["dimension"] = s.dimension;
  j["domain_volume"] = s.domain_volume;
  j["complete_below"] = finite_or_null(s.complete_below);
  Json values = Json::array();
  for (const auto& e : s.eigenvalues) values.push_back(Json::array({e.value, e.multiplicity}));
  j["eigenvalues"] = std::move(values);
  if (s.solver) {
    j["solver"] = Json{{"method", s.solver->method},
                       {"h", s.solver->spacing},
                       {"tol", s.solver->tolerance},
                       {"iterations", s.solver->iterations}};
  }
  return j;
}

Spectrum spectrum_from_json(const Json& j) {
  Spectrum s;
  s.p = required<double>(j, "p");
  s.bc = parse_boundary_condition(required<std::string>(j, "bc"));
  s.exactness = parse_exactness(required<std::string>(j, "exactness"));
  if (j.contains("dimension")) s.dimension = j.at("dimension").get<std::size_t>();
  if (j.contains("domain_volume")) s.domain_volume = j.at("domain_volume").get<double>();
  if (j.contains("complete_below")) s.complete_below = number_or_infinity(j.at("complete_below"));
  for (const auto& e : j.at("eigenvalues")) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("eigenvalue entries are [value, multiplicity]");
    s.eigenvalues.push_back(Eigenvalue{e[0].get<double>(), e[1].get<std::size_t>()});
  }
  if (j.contains("solver")) {
    const Json& m = j.at("solver");
    s.solver = SolverInfo{required<std::string>(m, "method"), required<double>(m, "h"), required<double>(m, "tol"),
                          required<std::size_t>(m, "iterations")};
  }
  validate_spectrum(s);
  return s;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  out << "value,multiplicity\n";
  for (const auto& e : s.eigenvalues) out << format_double(e.value) << ',' << e.multiplicity << '\n';
}

Spectrum read_spectrum_csv(std::istream& in, const Spectrum& meta) {
  Spectrum s = meta;
  s.eigenvalues.clear();
  std::string line;
  if (!std::getline(in, line) || line != "value,multiplicity") throw ValidationError("spectrum CSV: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) throw ValidationError("spectrum CSV: expected 2 columns");
    s.eigenvalues.push_back(Eigenvalue{cells[0], static_cast<std::size_t>(cells[1])});
  }
  validate_spectrum(s);
  return s;
}

void write_curve_csv(std::ostream& out, const CountingCurve& c) {
  out << "lambda,N,f\n";
  for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
    out << format_double(c.lambdas[i]) << ',' << c.counts[i] << ',' << format_double(c.normalized[i]) << '\n';
  }
}

CountingCurve read_curve_csv(std::istream& in, std::size_t dimension, double p, BoundaryCondition bc,
                             double domain_volume) {
  std::string line;
  if (!std::getline(in, line) || line != "lambda,N,f") throw ValidationError("curve CSV: bad header");
  std::vector<double> grid;
  std::vector<std::size_t> counts;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 3) throw ValidationError("curve CSV: expected 3 columns");
    grid.push_back(cells[0]);
    counts.push_back(static_cast<std::size_t>(cells[1]));
  }
  return make_curve(std::move(grid), std::move(counts), dimension, p, bc, domain_volume);
}

Json to_json(const CountingCurve& c) {
  return Json{{"dimension", c.dimension},         {"p", c.p},           {"bc", std::string(to_string(c.bc))},
              {"domain_volume", c.domain_volume}, {"lambda", c.lambdas}, {"N", c.counts}};
}

CountingCurve curve_from_json(const Json& j) {
  return make_curve(required<std::vector<double>>(j, "lambda"), required<std::vector<std::size_t>>(j, "N"),
                    required<std::size_t>(j, "dimension"), required<double>(j, "p"),
                    parse_boundary_condition(required<std::string>(j, "bc")), required<double>(j, "domain_volume"));
}

Json to_json(const WeylEstimate& e) {
  return Json{{"c_hat", e.c_hat},
              {"spread", e.spread},
              {"window", Json::array({e.window_lo, e.window_hi})},
              {"method", e.method}};
}

WeylEstimate weyl_estimate_from_json(const Json& j) {
  WeylEstimate e;
  e.c_hat = required<double>(j, "c_hat");
  e.spread = required<double>(j, "spread");
  const auto window = required<std::vector<double>>(j, "window");
  if (window.size() != 2) throw ValidationError("window must be [lo, hi]");
  e.window_lo = window[0];
  e.window_hi = window[1];
  e.method = required<std::string>(j, "method");
  return e;
}

Json to_json(const InequalityReport& r) {
  Json j{{"statement", r.statement},
         {"verdict", r.pass ? "pass" : "fail"},
         {"violations", r.violations},
         {"worst_margin", finite_or_null(r.worst_margin)},
         {"lambda", r.lambdas},
         {"lhs", r.lhs},
         {"rhs", r.rhs}};
  if (r.fit) {
    j["fit"] = Json{{"C1", r.fit->c1}, {"C2", r.fit->c2}, {"window", Json::array({r.fit->window_lo, r.fit->window_hi})}};
  }
  return j;
}

InequalityReport report_from_json(const Json& j) {
  InequalityReport r;
  r.statement = required<std::string>(j, "statement");
  const auto verdict = required<std::string>(j, "verdict");
  if (verdict != "pass" && verdict != "fail") throw ValidationError("verdict must be pass or fail");
  r.pass = verdict == "pass";
  r.violations = required<std::size_t>(j, "violations");
  r.worst_margin = number_or_infinity(j.at("worst_margin"));
  r.lambdas = required<std::vector<double>>(j, "lambda");
  r.lhs = required<std::vector<double>>(j, "lhs");
  r.rhs = required<std::vector<double>>(j, "rhs");
  if (j.contains("fit")) {
    const Json& f = j.at("fit");
    const auto window = required<std::vector<double>>(f, "window");
    if (window.size() != 2) throw ValidationError("fit window must be [lo, hi]");
    r.fit = FriedlanderFit{required<double>(f, "C1"), required<double>(f, "C2"), window[0], window[1]};
  }
  return r;
}

Json to_json(const SweepSummary& s) {
  return Json{{"statement", s.statement},
              {"generator", "philox4x32-10"},
              {"seed", s.seed},
              {"instances", s.instances},
              {"violations", s.violations},
              {"verdict", s.pass() ? "pass" : "fail"},
              {"worst_margin", finite_or_null(s.worst_margin)},
              {"failing_instances", s.failing_instances}};
}

SweepSummary sweep_from_json(const Json& j) {
  SweepSummary s;
  s.statement = required<std::string>(j, "statement");
  s.seed = required<std::uint64_t>(j, "seed");
  s.instances = required<std::size_t>(j, "instances");
  s.violations = required<std::size_t>(j, "violations");
  s.worst_margin = number_or_infinity(j.at("worst_margin"));
  s.failing_instances = required<std::vector<std::size_t>>(j, "failing_instances");
  return s;
}

void write_field_binary(std::ostream& out, const Field& u) {
  static_assert(sizeof(double) == 8);
  for (double x : u.values()) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    char bytes[8];
    for (int i = 0; i < 8; ++i) {
      bytes[i] = static_cast<char>(bits & 0xFF);
      bits >>= 8;
    }
    out.write(bytes, 8);
  }
}

std::vector<double> read_field_binary(std::istream& in) {
  std::vector<double> values;
  char bytes[8];
  while (in.read(bytes, 8)) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | static_cast<unsigned char>(bytes[i]);
    values.push_back(std::bit_cast<double>(bits));
  }
  if (in.gcount() != 0) throw ValidationError("field binary: trailing partial value");
  return values;
}

void write_field_csv(std::ostream& out, const Field& u) {
  for (double x : u.values()) out << format_double(x) << '\n';
}

std::vector<double> read_field_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 1) throw ValidationError("field CSV: expected one value per line");
    values.push_back(cells[0]);
  }
  return values;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << text;
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pweyl

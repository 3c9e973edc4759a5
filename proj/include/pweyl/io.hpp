#pragma once

#include "pweyl/checks.hpp"
#include "pweyl/counting.hpp"
#include "pweyl/domain.hpp"
#include "pweyl/grid.hpp"
#include "pweyl/packing.hpp"
#include "pweyl/spectrum.hpp"
#include "pweyl/sweeps.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace pweyl {

using Json = nlohmann::ordered_json;

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

/// Rationals are written as JSON integers when integral, else as "num/den"
/// strings. Numbers and decimal strings are accepted on input; a JSON float
/// is read through its shortest decimal form, so 0.1 means 1/10.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Domain& d);
Domain domain_from_json(const Json& j);

/// Packings always use "num/den" strings for scale and offsets.
Json to_json(const Packing& pk);
Packing packing_from_json(const Json& j);

/// An infinite completeness threshold is written as null.
Json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);
void write_spectrum_csv(std::ostream& out, const Spectrum& s);
/// Reads value,multiplicity rows; the metadata comes from `meta`.
Spectrum read_spectrum_csv(std::istream& in, const Spectrum& meta);

/// Columns lambda,N,f.
void write_curve_csv(std::ostream& out, const CountingCurve& c);
CountingCurve read_curve_csv(std::istream& in, std::size_t dimension, double p, BoundaryCondition bc,
                             double domain_volume);
Json to_json(const CountingCurve& c);
CountingCurve curve_from_json(const Json& j);

Json to_json(const WeylEstimate& e);
WeylEstimate weyl_estimate_from_json(const Json& j);

Json to_json(const InequalityReport& r);
InequalityReport report_from_json(const Json& j);

Json to_json(const SweepSummary& s);
SweepSummary sweep_from_json(const Json& j);

/// Node values as little-endian float64.
void write_field_binary(std::ostream& out, const Field& u);
std::vector<double> read_field_binary(std::istream& in);
/// One value per line.
void write_field_csv(std::ostream& out, const Field& u);
std::vector<double> read_field_csv(std::istream& in);

/// Whole-file helpers; throw ArgumentError when the file cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
Json read_json_file(const std::string& path);
/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace pweyl

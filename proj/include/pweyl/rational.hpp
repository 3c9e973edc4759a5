#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pweyl {

/// Exact rational used for box coordinates so that packing checks are free
/// of geometric round-off.
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion: every finite double is a dyadic rational.
Rational to_rational(double x);

double to_double(const Rational& r);

/// Parses "3", "-1/3", "0.125" or "1e-3" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form ("num" when the denominator is 1).
std::string to_string(const Rational& r);

std::vector<Rational> to_rational(const std::vector<double>& xs);
std::vector<double> to_double(const std::vector<Rational>& xs);

}  // namespace pweyl

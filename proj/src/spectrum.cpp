#include "pweyl/spectrum.hpp"

#include "pweyl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pweyl {

std::string_view to_string(Exactness e) {
  switch (e) {
    case Exactness::exact: return "exact";
    case Exactness::oracle: return "oracle";
    case Exactness::discrete: return "discrete";
  }
  return "unknown";
}

Exactness parse_exactness(std::string_view text) {
  if (text == "exact") return Exactness::exact;
  if (text == "oracle") return Exactness::oracle;
  if (text == "discrete") return Exactness::discrete;
  throw ArgumentError("unknown exactness tag '" + std::string(text) + "'");
}

std::size_t Spectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : eigenvalues) total += e.multiplicity;
  return total;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (const auto& e : eigenvalues) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

std::vector<Eigenvalue> merge_eigenvalues(std::vector<double> values, double relative_tolerance) {
  std::sort(values.begin(), values.end());
  std::vector<Eigenvalue> out;
  for (double v : values) {
    if (!out.empty()) {
      const double anchor = out.back().value;
      if (std::abs(v - anchor) <= relative_tolerance * std::max(std::abs(anchor), std::abs(v))) {
        ++out.back().multiplicity;
        continue;
      }
    }
    out.push_back(Eigenvalue{v, 1});
  }
  return out;
}

void validate_spectrum(const Spectrum& s) {
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i].multiplicity == 0) throw ValidationError("spectrum has a zero multiplicity");
    if (i > 0 && !(s.eigenvalues[i].value > s.eigenvalues[i - 1].value)) {
      throw ValidationError("spectrum values are not strictly increasing");
    }
  }
}

}  // namespace pweyl

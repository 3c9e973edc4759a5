#pragma once

#include <cmath>

namespace pweyl {

/// x^e for x >= 0, with fast paths for the exponents that occur for
/// p in {1.5, 2, 3, 4}.
inline double pow_nonneg(double x, double e) {
  if (e == 1.0) return x;
  if (e == 2.0) return x * x;
  if (e == 0.5) return std::sqrt(x);
  if (e == 1.5) return x * std::sqrt(x);
  if (e == 3.0) return x * x * x;
  if (e == 0.0) return 1.0;
  if (e == -0.25) return 1.0 / std::sqrt(std::sqrt(x));
  if (e == 0.75) return std::sqrt(x * std::sqrt(x));
  if (e == 1.0 / 3.0) return std::cbrt(x);
  return std::pow(x, e);
}

/// |x|^(e-1) x, the odd power map.
inline double signed_pow(double x, double e) { return x < 0 ? -pow_nonneg(-x, e) : pow_nonneg(x, e); }

}  // namespace pweyl

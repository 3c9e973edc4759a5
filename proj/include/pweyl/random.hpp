#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace pweyl {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
///
/// The key is the 64-bit seed; the counter holds a 64-bit stream index and a
/// 64-bit block index, so instance `i` of a sweep with seed `s` always draws
/// the same numbers regardless of how many instances ran before it.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  /// The bare bijection; exposed for known-answer tests.
  static Block generate(Block counter, Key key);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform on {0, ..., n - 1} by rejection.
  std::uint64_t below(std::uint64_t n);

 private:
  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  std::size_t used_ = 4;
};

}  // namespace pweyl

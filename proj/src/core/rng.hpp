// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "core/uint128.hpp"

namespace axt {

/// Seeded entropy source. The engine output is fixed by the standard, and the
/// bounded draws below use plain rejection, so every draw sequence is
/// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound == 0 means the full 64-bit range.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return next();
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do r = next(); while (r >= limit);
    return r % bound;
  }

  /// Uniform in [0, 2^bits), bits in [0, 64].
  std::uint64_t bits(unsigned bits) {
    if (bits == 0) return 0;
    const std::uint64_t r = next();
    return bits >= 64 ? r : (r >> (64 - bits));
  }

  /// Uniform in [0, bound) for 128-bit bounds.
  u128 below128(u128 bound) {
    if (bound <= ~std::uint64_t{0}) return below(static_cast<std::uint64_t>(bound));
    unsigned width = 128 - count_leading_zeros(bound - 1);
    u128 r;
    do {
      r = (u128{next()} << 64) | next();
      if (width < 128) r &= (u128{1} << width) - 1;
    } while (r >= bound);
    return r;
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace axt

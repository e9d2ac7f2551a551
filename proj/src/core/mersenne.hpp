// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include "core/uint128.hpp"

namespace axt {

inline constexpr u128 kMersenne89 = (u128{1} << 89) - 1;

/// (h * x) mod 2^89-1 for h < 2^89 and a 64-bit x, using only 64x64->128
/// products and shift/mask folding.
inline u128 mul_mod_m89(u128 h, std::uint64_t x) {
  const u128 lo = u128{static_cast<std::uint64_t>(h)} * x;
  const u128 hi = u128{static_cast<std::uint64_t>(h >> 64)} * x;  // < 2^89
  // full = lo + hi * 2^64 as three 64-bit limbs t0 | t1 | t2.
  const auto t0 = static_cast<std::uint64_t>(lo);
  const u128 mid = (lo >> 64) + static_cast<std::uint64_t>(hi);
  const auto t1 = static_cast<std::uint64_t>(mid);
  const auto t2 = static_cast<std::uint64_t>(hi >> 64) + static_cast<std::uint64_t>(mid >> 64);
  const u128 low89 = (u128{t1 & ((std::uint64_t{1} << 25) - 1)} << 64) | t0;
  const std::uint64_t high = (t1 >> 25) | (t2 << 39);
  u128 r = low89 + high;
  r = (r & kMersenne89) + (r >> 89);
  if (r >= kMersenne89) r -= kMersenne89;
  return r;
}

/// Prime field Z_p for a Mersenne prime p = 2^q - 1. Exponents up to 61 use a
/// single 128-bit product; q = 89 supports 64-bit evaluation points only.
class MersenneField {
 public:
  explicit MersenneField(unsigned exponent);

  unsigned exponent() const { return q_; }
  u128 prime() const { return p_; }

  u128 add(u128 a, u128 b) const {
    u128 r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  u128 mul_point(u128 h, std::uint64_t x) const;

  /// Horner evaluation of sum coeffs[i] * x^i.
  u128 eval(std::span<const u128> coeffs, std::uint64_t x) const;

 private:
  unsigned q_;
  u128 p_;
};

bool is_mersenne_exponent(unsigned q);

}  // namespace axt

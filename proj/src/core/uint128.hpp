// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

namespace axt {

using u128 = unsigned __int128;

inline unsigned count_leading_zeros(u128 x) {
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  const auto lo = static_cast<std::uint64_t>(x);
  if (hi) return static_cast<unsigned>(__builtin_clzll(hi));
  if (lo) return 64 + static_cast<unsigned>(__builtin_clzll(lo));
  return 128;
}

std::string u128_to_string(u128 v);
/// Parses a non-negative decimal; throws Error(Parse) on junk or overflow.
u128 u128_from_string(const std::string& text);

}  // namespace axt

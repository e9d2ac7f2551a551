// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/uint128.hpp"

#include "core/error.hpp"

namespace axt {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

u128 u128_from_string(const std::string& text) {
  if (text.empty()) fail(ErrorKind::Parse, "empty integer");
  u128 v = 0;
  const u128 max = ~u128{0};
  for (char c : text) {
    if (c < '0' || c > '9') fail(ErrorKind::Parse, "bad integer '" + text + "'");
    const unsigned digit = static_cast<unsigned>(c - '0');
    if (v > (max - digit) / 10) fail(ErrorKind::Parse, "integer overflow '" + text + "'");
    v = v * 10 + digit;
  }
  return v;
}

}  // namespace axt

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/uint128.hpp"

namespace axt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt to_big(u128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

inline Rational ratio(u128 num, u128 den) { return Rational(to_big(num), to_big(den)); }

/// Always "num/den", including integers ("1/1").
inline std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace axt

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/mersenne.hpp"

#include <algorithm>
#include <array>

#include "core/error.hpp"

namespace axt {

bool is_mersenne_exponent(unsigned q) {
  static constexpr std::array<unsigned, 10> kExponents{2, 3, 5, 7, 13, 17, 19, 31, 61, 89};
  return std::find(kExponents.begin(), kExponents.end(), q) != kExponents.end();
}

MersenneField::MersenneField(unsigned exponent) : q_(exponent) {
  if (!is_mersenne_exponent(exponent))
    fail(ErrorKind::InvalidArgument,
         "2^" + std::to_string(exponent) + "-1 is not a supported Mersenne prime");
  p_ = (u128{1} << exponent) - 1;
}

u128 MersenneField::mul_point(u128 h, std::uint64_t x) const {
  if (q_ == 89) return mul_mod_m89(h, x);
  u128 r = h * x;  // both below 2^61
  r = (r & p_) + (r >> q_);
  r = (r & p_) + (r >> q_);
  return r >= p_ ? r - p_ : r;
}

u128 MersenneField::eval(std::span<const u128> coeffs, std::uint64_t x) const {
  if (coeffs.empty()) return 0;
  u128 h = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) h = add(mul_point(h, x), coeffs[i]);
  return h;
}

}  // namespace axt

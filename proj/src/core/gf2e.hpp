// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "core/uint128.hpp"

namespace axt {

/// Carry-less 64x64 -> 128 bit product (polynomial multiplication over GF(2)).
u128 clmul(std::uint64_t a, std::uint64_t b);

/// Rabin's test for a polynomial of degree `degree` given by its coefficients
/// below x^degree (the leading term is implicit).
bool is_irreducible(unsigned degree, std::uint64_t low_terms);

/// GF(2^e) for 1 <= e <= 64. The reduction polynomial is the lexicographically
/// smallest irreducible of degree e with non-zero constant term, so two fields
/// of the same degree are always the same field.
class Gf2eField {
 public:
  explicit Gf2eField(unsigned degree);

  unsigned degree() const { return degree_; }
  /// Coefficients of the modulus below x^degree.
  std::uint64_t modulus_low() const { return low_; }
  std::uint64_t mask() const { return mask_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(clmul(a, b)); }
  std::uint64_t reduce(u128 product) const;

 private:
  unsigned degree_;
  std::uint64_t low_;
  std::uint64_t mask_;
};

}  // namespace axt

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/gf2e.hpp"

#include <array>
#include <mutex>

#include "core/error.hpp"

namespace axt {

u128 clmul(std::uint64_t a, std::uint64_t b) {
  u128 acc = 0;
  const u128 wide = a;
  while (b) {
    const int i = __builtin_ctzll(b);
    acc ^= wide << i;
    b &= b - 1;
  }
  return acc;
}

namespace {

unsigned poly_degree(u128 p) { return 127 - count_leading_zeros(p); }

// Reduction of a polynomial of degree < 2*degree modulo the full modulus.
u128 poly_mod(u128 x, u128 modulus) {
  const unsigned d = poly_degree(modulus);
  while (x != 0 && poly_degree(x) >= d) x ^= modulus << (poly_degree(x) - d);
  return x;
}

u128 poly_gcd(u128 a, u128 b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Polynomials mod f of degree <= 64, so residues fit in 64 bits.
struct ResidueRing {
  u128 modulus;
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(poly_mod(clmul(a, b), modulus));
  }
  std::uint64_t frobenius(std::uint64_t a, unsigned times) const {
    for (unsigned i = 0; i < times; ++i) a = mulmod(a, a);
    return a;
  }
};

}  // namespace

bool is_irreducible(unsigned degree, std::uint64_t low_terms) {
  if (degree == 0 || degree > 64) return false;
  if (degree < 64 && (low_terms >> degree) != 0) return false;
  const u128 f = (u128{1} << degree) | low_terms;
  const ResidueRing ring{f};
  const auto x = static_cast<std::uint64_t>(poly_mod(2, f));
  if (ring.frobenius(x, degree) != x) return false;
  for (unsigned q = 2; q <= degree; ++q) {
    if (degree % q) continue;
    bool prime = true;
    for (unsigned r = 2; r * r <= q; ++r)
      if (q % r == 0) prime = false;
    if (!prime) continue;
    const std::uint64_t g = ring.frobenius(x, degree / q) ^ x;
    if (poly_degree(poly_gcd(f, g)) != 0 || g == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t smallest_irreducible(unsigned degree) {
  static std::array<std::uint64_t, 65> cache{};
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (cache[degree]) return cache[degree];
  for (std::uint64_t low = 1;; low += 2) {
    if (is_irreducible(degree, low)) return cache[degree] = low;
  }
}

}  // namespace

Gf2eField::Gf2eField(unsigned degree) : degree_(degree) {
  if (degree < 1 || degree > 64)
    fail(ErrorKind::InvalidArgument, "GF(2^e) degree must be in [1, 64]");
  low_ = smallest_irreducible(degree);
  mask_ = degree == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << degree) - 1);
}

std::uint64_t Gf2eField::reduce(u128 product) const {
  const u128 modulus = (u128{1} << degree_) | low_;
  for (int bit = 2 * static_cast<int>(degree_) - 2; bit >= static_cast<int>(degree_); --bit) {
    if ((product >> bit) & 1) product ^= modulus << (bit - degree_);
  }
  return static_cast<std::uint64_t>(product);
}

}  // namespace axt

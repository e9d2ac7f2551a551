// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <vector>

#include "core/error.hpp"
#include "core/gf2e.hpp"
#include "core/mersenne.hpp"
#include "core/primes.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"

using namespace axt;

namespace {

// Remainder of polynomial a modulo b over GF(2), by long division.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = 63 - __builtin_clzll(b);
  for (int da = a ? 63 - __builtin_clzll(a) : -1; da >= db; da = a ? 63 - __builtin_clzll(a) : -1)
    a ^= b << (da - db);
  return a;
}

bool irreducible_by_trial_division(unsigned degree, std::uint64_t low) {
  const std::uint64_t p = (std::uint64_t{1} << degree) | low;
  for (unsigned d = 1; d <= degree / 2; ++d)
    for (std::uint64_t q = std::uint64_t{1} << d; q < (std::uint64_t{2} << d); ++q)
      if (poly_mod(p, q) == 0) return false;
  return true;
}

std::uint64_t slow_gf_mul(std::uint64_t a, std::uint64_t b, unsigned e, std::uint64_t low) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < e; ++i) {
    if ((b >> i) & 1) r ^= a;
    const bool carry = (a >> (e - 1)) & 1;
    a = e == 64 ? a << 1 : (a << 1) & ((std::uint64_t{1} << e) - 1);
    if (carry) a ^= low;
  }
  return r;
}

BigInt big_eval(const std::vector<u128>& coeffs, std::uint64_t x, const BigInt& p) {
  BigInt acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + to_big(coeffs[i])) % p;
  return acc;
}

}  // namespace

TEST_SUITE("fields") {

TEST_CASE("is_prime agrees with a sieve") {
  const std::uint64_t limit = 200000;
  std::vector<bool> composite(limit, false);
  composite[0] = composite[1] = true;
  for (std::uint64_t i = 2; i * i < limit; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  for (std::uint64_t n = 0; n < limit; ++n) REQUIRE(is_prime(n) == !composite[n]);
}

TEST_CASE("is_prime on large inputs") {
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK(is_prime(4294967311ull));
  CHECK_FALSE(is_prime(3215031751ull));        // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ull));
  CHECK_FALSE(is_prime(4294967297ull));        // 641 * 6700417
  CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("mul_mod matches 128-bit arithmetic") {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t m = rng.next() | 1, a = rng.next(), b = rng.next();
    REQUIRE(mul_mod(a, b, m) == static_cast<std::uint64_t>((u128{a} * b) % m));
  }
}

TEST_CASE("Rabin test agrees with trial division") {
  for (unsigned degree = 1; degree <= 11; ++degree)
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << degree); ++low)
      REQUIRE_MESSAGE(is_irreducible(degree, low) == irreducible_by_trial_division(degree, low),
                      "degree " << degree << " low " << low);
}

TEST_CASE("field modulus is the smallest irreducible with constant term") {
  for (unsigned e = 1; e <= 11; ++e) {
    std::uint64_t expected = 0;
    for (std::uint64_t low = 1;; low += 2)
      if (irreducible_by_trial_division(e, low)) {
        expected = low;
        break;
      }
    CHECK(Gf2eField(e).modulus_low() == expected);
  }
  CHECK(Gf2eField(4).modulus_low() == 0x3);
  CHECK(Gf2eField(8).modulus_low() == 0x1B);
  CHECK(is_irreducible(64, Gf2eField(64).modulus_low()));
}

TEST_CASE("field multiplication matches shift-and-add") {
  for (unsigned e : {2u, 4u, 8u, 13u, 32u, 61u, 64u}) {
    const Gf2eField f(e);
    Rng rng(e);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t a = rng.next() & f.mask(), b = rng.next() & f.mask();
      REQUIRE(f.mul(a, b) == slow_gf_mul(a, b, e, f.modulus_low()));
    }
  }
}

TEST_CASE("GF(2^8) has inverses and distributes") {
  const Gf2eField f(8);
  for (std::uint64_t a = 1; a < 256; ++a) {
    int inverses = 0;
    for (std::uint64_t b = 1; b < 256; ++b) inverses += f.mul(a, b) == 1;
    REQUIRE(inverses == 1);
  }
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = rng.bits(8), b = rng.bits(8), c = rng.bits(8);
    CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
  }
}

TEST_CASE("clmul against bitwise definition") {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = rng.next(), b = rng.next();
    u128 expected = 0;
    for (unsigned j = 0; j < 64; ++j)
      if ((b >> j) & 1) expected ^= u128{a} << j;
    REQUIRE(clmul(a, b) == expected);
  }
}

TEST_CASE("2^89-1 multiply matches big integers") {
  Rng rng(89);
  const BigInt p = to_big(kMersenne89);
  for (int i = 0; i < 20000; ++i) {
    const u128 h = rng.below128(kMersenne89);
    const std::uint64_t x = rng.next();
    REQUIRE(to_big(mul_mod_m89(h, x)) == (to_big(h) * x) % p);
  }
  CHECK(mul_mod_m89(kMersenne89 - 1, ~std::uint64_t{0}) ==
        static_cast<u128>((to_big(kMersenne89 - 1) * ~std::uint64_t{0}) % p));
}

TEST_CASE("Mersenne polynomial evaluation matches big integers") {
  for (unsigned q : {13u, 31u, 61u, 89u}) {
    const MersenneField f(q);
    const BigInt p = to_big(f.prime());
    Rng rng(q);
    for (int i = 0; i < 500; ++i) {
      std::vector<u128> coeffs(7);
      for (auto& c : coeffs) c = rng.below128(f.prime());
      const std::uint64_t x = q == 89 ? rng.next() : static_cast<std::uint64_t>(rng.below128(f.prime()));
      REQUIRE(to_big(f.eval(coeffs, x)) == big_eval(coeffs, x, p));
    }
  }
  CHECK_THROWS_AS(MersenneField(11), Error);
  CHECK_FALSE(is_mersenne_exponent(23));
  CHECK(is_mersenne_exponent(89));
}

TEST_CASE("u128 decimal round trip") {
  Rng rng(128);
  for (int i = 0; i < 1000; ++i) {
    const u128 v = (u128{rng.next()} << 64) | rng.next();
    REQUIRE(u128_from_string(u128_to_string(v)) == v);
  }
  CHECK(u128_to_string(0) == "0");
  CHECK(u128_to_string(kMersenne89) == "618970019642690137449562111");
  CHECK_THROWS_AS(u128_from_string(""), Error);
  CHECK_THROWS_AS(u128_from_string("-1"), Error);
  CHECK_THROWS_AS(u128_from_string("340282366920938463463374607431768211456"), Error);
}

}  // TEST_SUITE

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <map>
#include <set>

#include "core/error.hpp"
#include "core/primes.hpp"
#include "core/samplers.hpp"
#include "core/spec_json.hpp"

using namespace axt;

namespace {

Sampler odd(unsigned w, std::uint64_t a, std::uint64_t t) {
  return Sampler(SamplerSpec{OddMul2wSpec{w, a, t}, std::nullopt});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

// The sampling test as the one-line C expression on native unsigned types.
template <typename U>
bool c_expression(U a, U x, U t) {
  return static_cast<U>(a * x) <= t;
}

}  // namespace

TEST_SUITE("samplers") {

TEST_CASE("oddmul2w equals the native C expression") {
  Rng rng(64);
  for (int i = 0; i < 20000; ++i) {
    auto s8 = random_spec(Scheme::OddMul2w, SizeParams{.w = 8}, rng);
    auto s16 = random_spec(Scheme::OddMul2w, SizeParams{.w = 16}, rng);
    auto s32 = random_spec(Scheme::OddMul2w, SizeParams{.w = 32}, rng);
    auto s64 = random_spec(Scheme::OddMul2w, SizeParams{.w = 64}, rng);
    const std::uint64_t x = rng.next();
    auto p8 = std::get<OddMul2wSpec>(s8.params);
    auto p16 = std::get<OddMul2wSpec>(s16.params);
    auto p32 = std::get<OddMul2wSpec>(s32.params);
    auto p64 = std::get<OddMul2wSpec>(s64.params);
    REQUIRE(Sampler(s8).sample(x & 0xff) ==
            c_expression<std::uint8_t>(p8.a, static_cast<std::uint8_t>(x), p8.t));
    REQUIRE(Sampler(s16).sample(x & 0xffff) ==
            c_expression<std::uint16_t>(p16.a, static_cast<std::uint16_t>(x), p16.t));
    REQUIRE(Sampler(s32).sample(x & 0xffffffff) ==
            c_expression<std::uint32_t>(p32.a, static_cast<std::uint32_t>(x), p32.t));
    REQUIRE(Sampler(s64).sample(x) == c_expression<std::uint64_t>(p64.a, x, p64.t));
  }
}

TEST_CASE("odd multipliers permute [2^w]") {
  for (unsigned w : {1u, 3u, 8u, 10u}) {
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << w); a += 2) {
      std::set<u128> images;
      const Sampler s = odd(w, a, 0);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << w); ++x) images.insert(s.hash(x));
      REQUIRE(images.size() == (std::size_t{1} << w));
    }
  }
}

TEST_CASE("modprime multipliers permute [p]") {
  for (std::uint64_t p : {2ull, 17ull, 257ull}) {
    for (std::uint64_t a = 1; a < p; ++a) {
      std::set<u128> images;
      const Sampler s(SamplerSpec{ModPrimeSpec{p, a, 0}, std::nullopt});
      for (std::uint64_t x = 0; x < p; ++x) images.insert(s.hash(x));
      REQUIRE(images.size() == p);
    }
  }
}

TEST_CASE("raising the threshold only adds keys") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t a = draw_odd(rng, 10);
    const std::uint64_t t1 = rng.bits(10), t2 = rng.bits(10);
    const auto lo = odd(10, a, std::min(t1, t2)), hi = odd(10, a, std::max(t1, t2));
    for (std::uint64_t x = 0; x < 1024; ++x)
      if (lo.sample(x)) REQUIRE(hi.sample(x));
    const std::uint64_t p = 1031;
    const std::uint64_t b = rng.below(p), m = rng.below(p), u1 = rng.below(p), u2 = rng.below(p);
    const Sampler alo(SamplerSpec{Affine2IndepSpec{p, m, b, std::min(u1, u2)}, std::nullopt});
    const Sampler ahi(SamplerSpec{Affine2IndepSpec{p, m, b, std::max(u1, u2)}, std::nullopt});
    for (std::uint64_t x = 0; x < p; ++x)
      if (alo.sample(x)) REQUIRE(ahi.sample(x));
  }
}

TEST_CASE("t = 2^w - 1 samples everything, key 0 is always sampled") {
  const auto all = odd(8, 77, 255);
  for (std::uint64_t x = 0; x < 256; ++x) CHECK(all.sample(x));
  Rng rng(4);
  for (int i = 0; i < 100; ++i) CHECK(Sampler(random_spec(Scheme::OddMul2w, {.w = 8}, rng)).sample(0));
}

TEST_CASE("draw_odd is uniform over odd residues") {
  // Chi-square over the 8 odd residues mod 16; 24.32 is the 0.999 quantile
  // with 7 degrees of freedom.
  Rng rng(123);
  std::array<std::uint64_t, 16> counts{};
  const int draws = 80000;
  for (int i = 0; i < draws; ++i) {
    const std::uint64_t a = draw_odd(rng, 4);
    REQUIRE(a % 2 == 1);
    REQUIRE(a < 16);
    ++counts[a];
  }
  double chi = 0;
  const double expected = draws / 8.0;
  for (std::uint64_t a = 1; a < 16; a += 2) chi += (counts[a] - expected) * (counts[a] - expected) / expected;
  CHECK(chi < 24.32);
  CHECK(draw_odd(rng, 64) % 2 == 1);
}

TEST_CASE("affine mod 17 is exactly pairwise uniform") {
  const std::uint64_t p = 17;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = x + 1; y < p; ++y) {
      std::map<std::pair<u128, u128>, int> joint;
      for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
          const Sampler s(SamplerSpec{Affine2IndepSpec{p, a, b, 0}, std::nullopt});
          ++joint[{s.hash(x), s.hash(y)}];
        }
      REQUIRE(joint.size() == p * p);
      for (const auto& [k, c] : joint) REQUIRE(c == 1);
    }
}

TEST_CASE("degree-3 polynomial over GF(2^4) is exactly 4-wise uniform") {
  const std::vector<std::array<std::uint64_t, 4>> key_sets{{0, 1, 2, 3}, {1, 5, 9, 15}, {2, 7, 11, 12}};
  for (const auto& keys : key_sets) {
    std::map<std::array<u128, 4>, int> joint;
    for (std::uint64_t c = 0; c < (1u << 16); ++c) {
      PolyKIndepSpec poly{PolyField{PolyField::Kind::GF2e, 4},
                          {c & 15, (c >> 4) & 15, (c >> 8) & 15, (c >> 12) & 15},
                          {}};
      const Sampler s(SamplerSpec{poly, std::nullopt});
      ++joint[{s.hash(keys[0]), s.hash(keys[1]), s.hash(keys[2]), s.hash(keys[3])}];
    }
    REQUIRE(joint.size() == (1u << 16));
  }
}

TEST_CASE("poly over 2^89-1 uses 64-bit keys") {
  auto spec = random_spec(Scheme::PolyKIndep,
                          SizeParams{.field = PolyField{PolyField::Kind::MersennePrime, 89}, .k = 7},
                          9);
  const Sampler s(spec);
  CHECK(s.universe() == Universe::power_of_two(64));
  CHECK(std::get<PolyKIndepSpec>(spec.params).coefficients.size() == 7);
  CHECK(s.hash(~std::uint64_t{0}) < kMersenne89);
}

TEST_CASE("tabulation four-key identity") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Sampler s(random_spec(Scheme::Tabulation, SizeParams{.chars = 2, .char_bits = 8, .out_bits = 16}, rng));
    const std::uint64_t x0 = rng.bits(8), x1 = rng.bits(8), y0 = rng.bits(8), y1 = rng.bits(8);
    auto key = [](std::uint64_t lo, std::uint64_t hi) { return lo | (hi << 8); };
    REQUIRE((s.hash(key(x0, y0)) ^ s.hash(key(x0, y1)) ^ s.hash(key(x1, y0)) ^ s.hash(key(x1, y1))) == 0);
  }
}

TEST_CASE("mulshift takes the top bit") {
  const Sampler s(SamplerSpec{MulShiftSpec{8, 3}, std::nullopt});
  CHECK_FALSE(s.sample(42));  // 126 < 128
  CHECK(s.sample(43));        // 129
  CHECK(s.sample(128));       // 384 mod 256 = 128
}

TEST_CASE("parity sampler always selects an even number of keys") {
  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    const Sampler s(random_spec(Scheme::ParityConstrained, SizeParams{.u = 1 + rng.below(20)}, rng));
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < s.universe().param(); ++x) count += s.sample(x);
    REQUIRE(count % 2 == 0);
  }
}

TEST_CASE("prop2 draws match their outcome labels") {
  Rng rng(10);
  std::map<Prop2Spec::Outcome, int> positive;
  for (int i = 0; i < 8000; ++i) {
    const auto spec = random_spec(Scheme::Prop2Counterexample, SizeParams{.n = 2}, rng);
    const Sampler s(spec);
    const auto& p = std::get<Prop2Spec>(spec.params);
    ++positive[p.positive];
    int ones = 0;
    for (std::uint64_t x = 0; x < 4; ++x) ones += s.sample(x);
    if (p.positive == Prop2Spec::Outcome::Balanced) REQUIRE(ones == 2);
    if (p.positive == Prop2Spec::Outcome::None) REQUIRE(ones == 0);
    if (p.positive == Prop2Spec::Outcome::All) REQUIRE(ones == 4);
  }
  // eps = 1/8 for n = 2.
  CHECK(positive[Prop2Spec::Outcome::None] == doctest::Approx(1000).epsilon(0.15));
  CHECK(positive[Prop2Spec::Outcome::All] == doctest::Approx(1000).epsilon(0.15));
}

TEST_CASE("invalid parameters are rejected with the violated invariant") {
  CHECK(kind_of([] { odd(8, 4, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { odd(8, 3, 256); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { Sampler(SamplerSpec{ModPrimeSpec{15, 2, 0}, {}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { Sampler(SamplerSpec{ModPrimeSpec{17, 0, 0}, {}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { Sampler(SamplerSpec{Affine2IndepSpec{17, 3, 17, 0}, {}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { Sampler(SamplerSpec{ParityConstrainedSpec{{1, 0, 0}}, {}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { odd(8, 3, 0).sample(256); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { Sampler(SamplerSpec{ModPrimeSpec{17, 2, 3}, {}}).sample(17); }) == ErrorKind::OutOfRange);
  try {
    odd(8, 6, 1);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("odd") != std::string::npos);
  }
}

TEST_CASE("spec JSON round trips for every scheme") {
  const std::vector<std::pair<Scheme, SizeParams>> cases{
      {Scheme::OddMul2w, {.w = 64}},
      {Scheme::ModPrime, {.p = 257}},
      {Scheme::Affine2Indep, {.p = 1031}},
      {Scheme::PolyKIndep, {.field = {PolyField::Kind::MersennePrime, 89}, .k = 7}},
      {Scheme::PolyKIndep, {.field = {PolyField::Kind::GF2e, 8}, .k = 4,
                            .rule = {OutputRule::Kind::Threshold, 100}}},
      {Scheme::Tabulation, {.chars = 3, .char_bits = 4, .out_bits = 5}},
      {Scheme::MulShift, {.w = 16}},
      {Scheme::ParityConstrained, {.u = 9}},
      {Scheme::Prop2Counterexample, {.n = 3}},
      {Scheme::FullyRandom, {.u = 12}},
  };
  std::uint64_t seed = 100;
  for (const auto& [scheme, size] : cases) {
    const auto spec = random_spec(scheme, size, seed++);
    const auto j = spec_to_json(spec);
    const auto back = spec_from_json(j);
    CHECK(spec_to_json(back) == j);
    CHECK(back.seed == spec.seed);
    CHECK(parse_scheme(scheme_name(scheme)) == scheme);
    const Sampler a(spec), b(back);
    const std::uint64_t keys = a.universe().size() > 4096 ? 4096 : static_cast<std::uint64_t>(a.universe().size());
    for (std::uint64_t x = 0; x < keys; ++x) REQUIRE(a.sample(x) == b.sample(x));
  }
  CHECK(parse_scheme("affine") == Scheme::Affine2Indep);
  CHECK_THROWS_AS(parse_scheme("nope"), Error);
}

TEST_CASE("random_spec is reproducible") {
  const auto a = random_spec(Scheme::Tabulation, SizeParams{}, 77);
  const auto b = random_spec(Scheme::Tabulation, SizeParams{}, 77);
  CHECK(spec_to_json(a) == spec_to_json(b));
}

TEST_CASE("universe names round trip") {
  for (const auto& u : {Universe::power_of_two(64), Universe::prime(257), Universe::finite(9)})
    CHECK(Universe::parse(u.name()) == u);
  CHECK(Universe::power_of_two(64).size() == (u128{1} << 64));
  CHECK_THROWS_AS(Universe::parse("prime:256"), Error);
  CHECK_THROWS_AS(Universe::parse("pow2:65"), Error);
}

}  // TEST_SUITE

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/verify.hpp"

using namespace axt;

namespace {

ValueAssignment random_f2(const Universe& u, std::size_t n, Rng& rng) {
  ValueAssignment v(u, MonoidTag::f2());
  while (v.size() < n) v.set(rng.below(static_cast<std::uint64_t>(u.size())), MonoidValue::bit(true));
  return v;
}

ValueAssignment random_int(const Universe& u, std::size_t n, Rng& rng) {
  ValueAssignment v(u, MonoidTag::wrap_int64());
  while (v.size() < n)
    v.set(rng.below(static_cast<std::uint64_t>(u.size())), MonoidValue::int64(rng.below(9) - 4));
  return v;
}

// Pr over every (seed, t) of a non-zero sum, by direct enumeration.
Rational brute_prob(Scheme scheme, std::uint64_t size, const ValueAssignment& v) {
  std::uint64_t hits = 0, total = 0;
  auto run = [&](auto hash, std::uint64_t m) {
    for (std::uint64_t t = 0; t < m; ++t) {
      MonoidValue sum = zero(v.tag());
      for (const auto& [x, val] : v.entries())
        if (hash(x) <= t) sum += val;
      hits += !sum.is_zero();
      ++total;
    }
  };
  if (scheme == Scheme::OddMul2w) {
    const std::uint64_t m = std::uint64_t{1} << size;
    for (std::uint64_t a = 1; a < m; a += 2) run([&](std::uint64_t x) { return (a * x) % m; }, m);
  } else if (scheme == Scheme::ModPrime) {
    for (std::uint64_t a = 1; a < size; ++a) run([&](std::uint64_t x) { return (a * x) % size; }, size);
  } else {
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b)
        run([&](std::uint64_t x) { return (a * x + b) % size; }, size);
  }
  return Rational(hits, total);
}

std::uint64_t abs_mod(std::uint64_t v, std::uint64_t m) {
  v %= m;
  return std::min(v, (m - v) % m);
}

// Sum over delta = 1..k of Pr over odd a of |a z| < delta, straight from the
// statement.
Rational brute_good_sum(unsigned w, std::uint64_t z, std::uint64_t k) {
  const std::uint64_t m = std::uint64_t{1} << w;
  std::uint64_t count = 0;
  for (std::uint64_t delta = 1; delta <= k; ++delta)
    for (std::uint64_t a = 1; a < m; a += 2) count += abs_mod(a * z, m) < delta;
  return Rational(count, m / 2);
}

// Pr over the seeds that the good interval around x has length >= delta,
// read from the pointwise conditions on the hash values instead of the
// sorted order.
Rational brute_tail(TailScheme scheme, std::uint64_t p, const std::vector<std::uint64_t>& keys,
                    std::uint64_t x, std::uint64_t delta) {
  std::uint64_t hits = 0, seeds = 0;
  auto test = [&](std::uint64_t a, std::uint64_t b) {
    ++seeds;
    const std::uint64_t hx = (a * x + b) % p;
    for (auto y : keys) {
      if (y == x) continue;
      const std::uint64_t hy = (a * y + b) % p;
      const std::uint64_t gap = hy > hx ? hy - hx : hx - hy;
      if (gap < delta) return;
    }
    if (hx + delta > p) return;
    if (scheme == TailScheme::Affine2Indep && hx < delta) return;
    ++hits;
  };
  if (scheme == TailScheme::Affine2Indep) {
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) test(a, b);
  } else {
    for (std::uint64_t a = 1; a < p; ++a) test(a, 0);
  }
  return Rational(hits, seeds);
}

BigInt ipow(const BigInt& b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("exhaustive_prob matches direct enumeration") {
  Rng rng(1);
  for (int trial = 0; trial < 12; ++trial) {
    const bool ints = trial % 2;
    const std::size_t n = 1 + rng.below(8);
    {
      const Universe u = Universe::power_of_two(6);
      const auto v = ints ? random_int(u, n, rng) : random_f2(u, n, rng);
      const auto r = exhaustive_prob(Scheme::OddMul2w, 6, v);
      REQUIRE(r.exact);
      CHECK(*r.exact == brute_prob(Scheme::OddMul2w, 6, v));
      CHECK(r.denominator == 32 * 64);
      CHECK(ratio(r.good_total, r.denominator) == *r.exact);
    }
    {
      const Universe u = Universe::prime(31);
      const auto v = ints ? random_int(u, n, rng) : random_f2(u, n, rng);
      CHECK(*exhaustive_prob(Scheme::ModPrime, 31, v).exact == brute_prob(Scheme::ModPrime, 31, v));
    }
    {
      const Universe u = Universe::prime(13);
      const auto v = ints ? random_int(u, n, rng) : random_f2(u, n, rng);
      CHECK(*exhaustive_prob(Scheme::Affine2Indep, 13, v).exact == brute_prob(Scheme::Affine2Indep, 13, v));
    }
  }
}

TEST_CASE("exhaustive_prob does not depend on the worker count") {
  Rng rng(2);
  const auto v = random_int(Universe::power_of_two(10), 12, rng);
  const auto one = exhaustive_prob(Scheme::OddMul2w, 10, v, 1);
  for (unsigned w : {2u, 3u, 7u}) {
    const auto many = exhaustive_prob(Scheme::OddMul2w, 10, v, w);
    CHECK(many.good_total == one.good_total);
    CHECK(*many.exact == *one.exact);
  }
}

TEST_CASE("exhaustive bounds hold on random small assignments") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = 1 + rng.below(12);
    const auto v = random_f2(Universe::power_of_two(7), n, rng);
    CHECK(*exhaustive_prob(Scheme::OddMul2w, 7, v).exact >= theorem_bound(Scheme::OddMul2w, 7, n));
    const auto vp = random_int(Universe::prime(61), n, rng);
    CHECK(*exhaustive_prob(Scheme::ModPrime, 61, vp).exact >= theorem_bound(Scheme::ModPrime, 61, n));
    CHECK(*exhaustive_prob(Scheme::Affine2Indep, 61, vp).exact >= theorem_bound(Scheme::Affine2Indep, 61, n));
  }
}

TEST_CASE("exhaustive_prob rejects oversized or mismatched input") {
  const ValueAssignment v(Universe::power_of_two(20), MonoidTag::f2());
  CHECK_THROWS_AS(exhaustive_prob(Scheme::OddMul2w, 20, v), Error);
  const ValueAssignment w8(Universe::power_of_two(8), MonoidTag::f2());
  CHECK_THROWS_AS(exhaustive_prob(Scheme::OddMul2w, 9, w8), Error);
  CHECK_THROWS_AS(exhaustive_prob(Scheme::Tabulation, 8, w8), Error);
}

TEST_CASE("theorem bounds") {
  CHECK(theorem_bound(Scheme::OddMul2w, 8, 5) == Rational(1, 8));
  CHECK(theorem_bound(Scheme::ModPrime, 257, 40) == Rational(1, 8));
  CHECK(theorem_bound(Scheme::Affine2Indep, 257, 4) == Rational(66049 - 16, 66049 * 8));
}

TEST_CASE("single key at zero is always found") {
  ValueAssignment v(Universe::power_of_two(8), MonoidTag::f2());
  v.set(0, MonoidValue::bit(true));
  CHECK(*exhaustive_prob(Scheme::OddMul2w, 8, v).exact == 1);
}

TEST_CASE("good-sum point check matches the statement") {
  const auto r = check_good_sum_lemma(3, 1, 2);
  CHECK(r.lhs == Rational(1, 2));
  CHECK(r.bound == Rational(1, 2));
  CHECK(r.holds);
  for (unsigned w : {3u, 4u, 5u, 6u})
    for (std::uint64_t z = 1; z < (1u << w); ++z)
      for (std::uint64_t k = 1; k <= (1u << w); k += 3) {
        const auto c = check_good_sum_lemma(w, z, k);
        REQUIRE(c.lhs == brute_good_sum(w, z, k));
        REQUIRE(c.bound == Rational(BigInt(4 * (k / 2) * ((k + 1) / 2)), BigInt(1) << w));
      }
  CHECK_THROWS_AS(check_good_sum_lemma(3, 0, 1), Error);
  CHECK_THROWS_AS(check_good_sum_lemma(3, 8, 1), Error);
}

TEST_CASE("good-sum sweep covers every triple without violations") {
  const auto r = sweep_good_sum_lemma(3, 7, 2);
  std::uint64_t expected = 0;
  for (unsigned w = 3; w <= 7; ++w) expected += ((1u << w) - 1) * (1u << w);
  CHECK(r.checked == expected);
  CHECK(r.violations == 0);
  CHECK(r.tight > 0);
  CHECK_FALSE(r.first_violation);
  // Tight count agrees with point checks at w = 4.
  std::uint64_t tight = 0;
  for (std::uint64_t z = 1; z < 16; ++z)
    for (std::uint64_t k = 1; k <= 16; ++k) {
      const auto c = check_good_sum_lemma(4, z, k);
      tight += c.lhs == c.bound;
    }
  CHECK(sweep_good_sum_lemma(4, 4).tight == tight);
}

TEST_CASE("tail checks match the pointwise conditions") {
  Rng rng(5);
  for (const auto scheme : {TailScheme::Affine2Indep, TailScheme::ModPrime}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::uint64_t p = trial % 2 ? 17 : 19;
      std::vector<std::uint64_t> keys;
      const auto n = 1 + rng.below(4);
      while (keys.size() < n) {
        const auto k = rng.below(p);
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
      }
      const auto x = keys[rng.below(keys.size())];
      const auto delta = 1 + rng.below(9);
      const auto r = check_tail_bounds(scheme, p, keys, x, delta);
      REQUIRE(r.lhs == brute_tail(scheme, p, keys, x, delta));
      const Rational bound = scheme == TailScheme::Affine2Indep
                                 ? 1 - Rational(n * (2 * delta - 1), p)
                                 : 1 - Rational(2 * n * (delta - 1), p - 1);
      REQUIRE(r.bound == bound);
      REQUIRE(r.holds == (r.lhs >= r.bound));
    }
  }
  CHECK_THROWS_AS(check_tail_bounds(TailScheme::ModPrime, 17, {1, 2}, 3, 1), Error);
  CHECK_THROWS_AS(check_tail_bounds(TailScheme::ModPrime, 16, {1, 2}, 1, 1), Error);
}

TEST_CASE("tail sweeps have no violations") {
  for (const auto scheme : {TailScheme::Affine2Indep, TailScheme::ModPrime}) {
    const auto r = sweep_tail_bounds(scheme, 13, 3, 6);
    CHECK(r.checked == (13 + 78 * 2 + 286 * 3) * 6);
    CHECK(r.violations == 0);
  }
}

TEST_CASE("neighbor intervals") {
  // Hashes 2, 5, 9 in [12]: I0=[0,2) I1=[2,5) I2=[5,9) I3=[9,12).
  const std::vector<std::uint64_t> h{2, 5, 9};
  CHECK(neighbor_intervals(h, 0, 12).left == 2);
  CHECK(neighbor_intervals(h, 0, 12).right == 3);
  CHECK(neighbor_intervals(h, 1, 12).ell() == 3);
  CHECK(neighbor_intervals(h, 2, 12).right == 3);
  CHECK(neighbor_intervals(h, 2, 12).ell() == 3);
}

TEST_CASE("Wilson interval") {
  const auto [lo, hi] = wilson_interval(50, 100, 1.96);
  CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
  const auto [zlo, zhi] = wilson_interval(0, 1000);
  CHECK(zlo == doctest::Approx(0.0));
  CHECK(zhi > 0.0);
  const auto [olo, ohi] = wilson_interval(1000, 1000);
  CHECK(ohi == doctest::Approx(1.0));
  CHECK(olo < 1.0);
}

TEST_CASE("Monte Carlo interval covers the exact probability") {
  Rng rng(6);
  const auto v = random_f2(Universe::power_of_two(8), 5, rng);
  const auto exact = to_double(*exhaustive_prob(Scheme::OddMul2w, 8, v).exact);
  const auto mc = mc_prob(Scheme::OddMul2w, SizeParams{.w = 8}, v, 50000, 99);
  CHECK(mc.ci_low <= exact);
  CHECK(exact <= mc.ci_high);
  CHECK(mc.trials == 50000);
  const auto again = mc_prob(Scheme::OddMul2w, SizeParams{.w = 8}, v, 50000, 99);
  CHECK(again.hits == mc.hits);
}

TEST_CASE("exact fourth moments match independent formulas") {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    std::vector<std::uint64_t> keys;
    while (keys.size() < n) {
      const auto k = rng.below(16);
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back((rng.coin() ? 1 : -1) * static_cast<std::int64_t>(1 + rng.below(5)));
    const auto r = ams_moment_check(MomentReport::Mode::ExactGF2e, keys, values, {});
    // Moments up to four only see 4-wise joint distributions, which match
    // fully independent fair bits.
    BigInt s2 = 0, s4 = 0;
    std::uint64_t nonzero = 0;
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      BigInt x = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) x += values[i];
      s2 += x * x;
      s4 += ipow(x, 4);
      nonzero += x != 0;
    }
    CHECK(*r.e_x2_exact == Rational(s2, BigInt(1) << n));
    CHECK(*r.e_x4_exact == Rational(s4, BigInt(1) << n));
    BigInt sum = 0, sq = 0;
    for (auto v : values) {
      sum += v;
      sq += BigInt(v) * v;
    }
    CHECK(*r.e_x2_exact == Rational(sum * sum + sq, 4));
    if (n <= 4) CHECK(*r.pr_nonzero_exact == Rational(nonzero, BigInt(1) << n));
    CHECK(r.fourth_moment_bound);
    CHECK(r.exceeds_one_third);
  }
}

TEST_CASE("moment check input validation") {
  CHECK_THROWS_AS(ams_moment_check(MomentReport::Mode::ExactGF2e, {1, 2}, {1}, {}), Error);
  CHECK_THROWS_AS(ams_moment_check(MomentReport::Mode::ExactGF2e, {1, 1}, {1, 2}, {}), Error);
  CHECK_THROWS_AS(ams_moment_check(MomentReport::Mode::ExactGF2e, {1, 16}, {1, 2}, {}), Error);
  CHECK_THROWS_AS(ams_moment_check(MomentReport::Mode::ExactGF2e, {1, 2}, {1, 0}, {}), Error);
  AmsParams big{PolyField{PolyField::Kind::GF2e, 8}, 1000, 0};
  CHECK_THROWS_AS(ams_moment_check(MomentReport::Mode::ExactGF2e, {1, 2}, {1, 2}, big), Error);
}

TEST_CASE("Monte Carlo moments approach the exact ones") {
  const std::vector<std::uint64_t> keys{1, 4, 9};
  const std::vector<std::int64_t> values{2, -1, 3};
  const auto exact = ams_moment_check(MomentReport::Mode::ExactGF2e, keys, values, {});
  AmsParams params{PolyField{PolyField::Kind::MersennePrime, 61}, 40000, 3};
  const auto mc = ams_moment_check(MomentReport::Mode::MonteCarlo, keys, values, params);
  CHECK(mc.e_x2 == doctest::Approx(exact.e_x2).epsilon(0.05));
  CHECK(mc.e_x4 == doctest::Approx(exact.e_x4).epsilon(0.08));
}

TEST_CASE("prop2 closed form and symmetry classes") {
  CHECK(prop2_nonzero_by_classes(2) == Rational(13, 32));
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const Rational eps(1, 4 * n);
    CHECK(prop2_nonzero_by_classes(n) == 4 * eps - 6 * eps * eps);
  }
  const auto v = prop2_values(2);
  CHECK(v.size() == 8);
  CHECK(v.get(0) == MonoidValue::int64(1));
  CHECK(v.get(7) == MonoidValue::parse(MonoidTag::wrap_int64(), "-1"));
}

TEST_CASE("counterexample suite") {
  CounterexampleOptions opts;
  opts.parity_max_u = 10;
  opts.random_tables = 500;
  const auto r = counterexample_suite(opts);
  CHECK(r.all_hold);
  CHECK(r.parity.size() == 10);
  for (const auto& c : r.parity) {
    CHECK(c.pr_nonzero == 0);
    CHECK(c.uniform_on_u_minus_1);
    CHECK(c.outcomes == (std::uint64_t{1} << (c.u - 1)));
  }
  CHECK(r.mulshift.multipliers == 256);
  CHECK(r.mulshift.nonzero == 0);
  CHECK(r.mulshift.keys == std::vector<std::uint64_t>{1, 129, 2, 130});
  CHECK(r.tabulation.exhaustive_fills == 16);
  CHECK(r.tabulation.exhaustive_nonzero == 0);
  CHECK(r.tabulation.random_nonzero == 0);
  REQUIRE(r.prop2.size() == 3);
  for (const auto& c : r.prop2) {
    CHECK(c.marginal_min == Rational(1, 2));
    CHECK(c.marginal_max == Rational(1, 2));
    CHECK(c.pairwise_min == Rational(1, 4));
    CHECK(c.pairwise_max == Rational(1, 4));
    CHECK(c.pr_nonzero == c.closed_form);
    CHECK(c.pr_nonzero == c.pr_nonzero_classes);
    CHECK(c.pr_nonzero <= c.bound);
  }
  CHECK(r.prop2[0].pr_nonzero == Rational(13, 32));
}

TEST_CASE("prop2 probability by sampling the construction") {
  Rng rng(8);
  const auto v = prop2_values(2);
  int nonzero = 0;
  const int trials = 40000;
  for (int i = 0; i < trials; ++i)
    nonzero += !sampled_sum(Sampler(random_spec(Scheme::Prop2Counterexample, SizeParams{.n = 2}, rng)), v).is_zero();
  CHECK(nonzero / double(trials) == doctest::Approx(13.0 / 32).epsilon(0.03));
}

TEST_CASE("small bias estimate") {
  const auto r = small_bias_mc({0, 1, 2}, 16, Scheme::OddMul2w, SizeParams{.w = 8}, 20000, 5);
  CHECK(r.eps == doctest::Approx(std::pow(7.0 / 8.0, 16)));
  CHECK(r.lower == doctest::Approx((1 - r.eps) / 2));
  CHECK(r.estimate >= r.lower - 0.02);
  CHECK(r.estimate <= r.upper + 0.02);
  CHECK_THROWS_AS(small_bias_mc({0, 0}, 4, Scheme::OddMul2w, SizeParams{.w = 8}, 100, 1), Error);
}

}  // TEST_SUITE

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>

#include "core/error.hpp"
#include "core/verify.hpp"

namespace axt {

namespace {

ParityCase parity_case(std::uint64_t u) {
  ParityCase c;
  c.u = u;
  ValueAssignment ones(Universe::finite(u), MonoidTag::f2());
  for (std::uint64_t x = 0; x < u; ++x) ones.set(x, MonoidValue::bit(true));

  // Leaving out key j, every pattern on the other u-1 keys must occur once.
  std::vector<std::vector<std::uint32_t>> seen(u, std::vector<std::uint32_t>(std::size_t{1} << (u - 1)));
  std::uint64_t nonzero = 0;
  const std::uint64_t patterns = std::uint64_t{1} << u;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    if (__builtin_popcountll(mask) % 2) continue;
    ParityConstrainedSpec spec;
    spec.bits.resize(u);
    for (std::uint64_t x = 0; x < u; ++x) spec.bits[x] = (mask >> x) & 1;
    const Sampler s(SamplerSpec{spec, std::nullopt});
    ++c.outcomes;
    if (!sampled_sum(s, ones).is_zero()) ++nonzero;
    for (std::uint64_t j = 0; j < u; ++j) {
      const std::uint64_t low = mask & ((std::uint64_t{1} << j) - 1);
      const std::uint64_t high = (mask >> (j + 1)) << j;
      ++seen[j][low | high];
    }
  }
  c.pr_nonzero = Rational(nonzero, c.outcomes);
  c.uniform_on_u_minus_1 = std::all_of(seen.begin(), seen.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](std::uint32_t n) { return n == 1; });
  });
  return c;
}

MulShiftCase mulshift_case(std::uint64_t x, std::uint64_t y) {
  MulShiftCase c;
  c.w = 8;
  const std::uint64_t half = 128;
  if (x >= half || y >= half || x == y)
    fail(ErrorKind::InvalidArgument, "mulshift counterexample needs distinct x, y below 2^(w-1)");
  c.keys = {x, x + half, y, y + half};
  ValueAssignment v(Universe::power_of_two(8), MonoidTag::f2());
  for (auto k : c.keys) v.set(k, MonoidValue::bit(true));
  for (std::uint64_t a = 0; a < 256; ++a) {
    const Sampler s(SamplerSpec{MulShiftSpec{8, a}, std::nullopt});
    ++c.multipliers;
    if (!sampled_sum(s, v).is_zero()) ++c.nonzero;
  }
  c.pr_nonzero = Rational(c.nonzero, c.multipliers);
  return c;
}

bool four_key_sum_vanishes(const TabulationSpec& spec, std::uint64_t a, std::uint64_t b) {
  const Sampler s(SamplerSpec{spec, std::nullopt});
  const unsigned shift = spec.char_bits;
  const std::array<std::uint64_t, 4> keys{a | (a << shift), a | (b << shift), b | (a << shift),
                                          b | (b << shift)};
  ValueAssignment v(s.universe(), MonoidTag::f2());
  u128 hash_xor = 0;
  for (auto k : keys) {
    v.set(k, MonoidValue::bit(true));
    hash_xor ^= s.hash(k);
  }
  return hash_xor == 0 && sampled_sum(s, v).is_zero();
}

TabulationCase tabulation_case(std::uint64_t random_tables, std::uint64_t seed) {
  TabulationCase c;
  // 1-bit characters and 1-bit entries: 2 tables x 2 entries = 16 fills.
  for (std::uint64_t fill = 0; fill < 16; ++fill) {
    TabulationSpec spec{2, 1, 1, {{fill & 1, (fill >> 1) & 1}, {(fill >> 2) & 1, (fill >> 3) & 1}}};
    ++c.exhaustive_fills;
    if (!four_key_sum_vanishes(spec, 0, 1)) ++c.exhaustive_nonzero;
  }
  Rng rng(seed);
  for (std::uint64_t i = 0; i < random_tables; ++i) {
    SizeParams size;
    size.chars = 2;
    size.char_bits = 8;
    size.out_bits = static_cast<unsigned>(1 + rng.below(64));
    const SamplerSpec spec = random_spec(Scheme::Tabulation, size, rng);
    const std::uint64_t a = rng.below(256);
    std::uint64_t b = rng.below(255);
    if (b >= a) ++b;
    ++c.random_tables;
    if (!four_key_sum_vanishes(std::get<TabulationSpec>(spec.params), a, b)) ++c.random_nonzero;
  }
  return c;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Prop2Case prop2_case(std::uint64_t n) {
  if (n < 1 || n > 6) fail(ErrorKind::TooLarge, "prop2 enumeration supports 1 <= n <= 6");
  Prop2Case c;
  c.n = n;
  c.u = 4 * n;
  c.eps = Rational(1, c.u);

  // Integer weights over the common denominator D = 4n * C(2n, n):
  // none and all weigh C(2n, n), each balanced subset weighs 4n - 2.
  const std::uint64_t half = 2 * n;
  const std::uint64_t choose = binomial(half, n);
  const std::uint64_t denom = 4 * n * choose;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> outcomes;  // (mask, weight)
  outcomes.emplace_back(0, choose);
  outcomes.emplace_back((std::uint64_t{1} << half) - 1, choose);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << half); ++mask)
    if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) == n) outcomes.emplace_back(mask, 4 * n - 2);

  const std::size_t items = c.u;
  std::vector<std::uint64_t> marginal(items, 0);
  std::vector<std::uint64_t> pair(items * items, 0);
  std::uint64_t nonzero = 0;
  for (const auto& [pm, pw] : outcomes) {
    for (const auto& [nm, nw] : outcomes) {
      const std::uint64_t w = pw * nw;
      const std::uint64_t joint = pm | (nm << half);
      if (__builtin_popcountll(pm) != __builtin_popcountll(nm)) nonzero += w;
      for (std::size_t i = 0; i < items; ++i) {
        if (!((joint >> i) & 1)) continue;
        marginal[i] += w;
        for (std::size_t j = i + 1; j < items; ++j)
          if ((joint >> j) & 1) pair[i * items + j] += w;
      }
    }
  }
  const std::uint64_t total = denom * denom;
  auto [mmin, mmax] = std::minmax_element(marginal.begin(), marginal.end());
  std::uint64_t pmin = ~std::uint64_t{0}, pmax = 0;
  for (std::size_t i = 0; i < items; ++i)
    for (std::size_t j = i + 1; j < items; ++j) {
      pmin = std::min(pmin, pair[i * items + j]);
      pmax = std::max(pmax, pair[i * items + j]);
    }
  c.marginal_min = Rational(*mmin, total);
  c.marginal_max = Rational(*mmax, total);
  c.pairwise_min = Rational(pmin, total);
  c.pairwise_max = Rational(pmax, total);
  c.pr_nonzero = Rational(nonzero, total);
  c.pr_nonzero_classes = prop2_nonzero_by_classes(n);
  c.closed_form = 4 * c.eps - 6 * c.eps * c.eps;
  c.bound = Rational(4, c.u);
  c.holds = c.marginal_min == Rational(1, 2) && c.marginal_max == Rational(1, 2) &&
            c.pairwise_min == Rational(1, 4) && c.pairwise_max == Rational(1, 4) &&
            c.pr_nonzero == c.pr_nonzero_classes && c.pr_nonzero == c.closed_form &&
            c.pr_nonzero <= c.bound;
  return c;
}

}  // namespace

Rational prop2_nonzero_by_classes(std::uint64_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "prop2 needs n >= 1");
  const Rational eps(1, 4 * n);
  // (mass, number sampled) for none / all / balanced.
  const std::array<std::pair<Rational, std::uint64_t>, 3> classes{
      {{eps, 0}, {eps, 2 * n}, {1 - 2 * eps, n}}};
  Rational pr = 0;
  for (const auto& [mp, kp] : classes)
    for (const auto& [mn, kn] : classes)
      if (kp != kn) pr += mp * mn;
  return pr;
}

ValueAssignment prop2_values(std::uint64_t n) {
  ValueAssignment v(Universe::finite(4 * n), MonoidTag::wrap_int64());
  for (std::uint64_t x = 0; x < 2 * n; ++x) v.set(x, MonoidValue::int64(1));
  for (std::uint64_t x = 2 * n; x < 4 * n; ++x) v.set(x, MonoidValue::int64(~std::uint64_t{0}));
  return v;
}

CounterexampleReport counterexample_suite(const CounterexampleOptions& opts) {
  if (opts.parity_max_u < 1 || opts.parity_max_u > 20)
    fail(ErrorKind::TooLarge, "parity enumeration supports 1 <= u <= 20");
  CounterexampleReport r;
  for (std::uint64_t u = 1; u <= opts.parity_max_u; ++u) r.parity.push_back(parity_case(u));
  r.mulshift = mulshift_case(opts.mulshift_x, opts.mulshift_y);
  r.tabulation = tabulation_case(opts.random_tables, opts.seed);
  for (auto n : opts.prop2_n) r.prop2.push_back(prop2_case(n));

  r.all_hold =
      std::all_of(r.parity.begin(), r.parity.end(),
                  [](const ParityCase& c) { return c.pr_nonzero == 0 && c.uniform_on_u_minus_1; }) &&
      r.mulshift.nonzero == 0 && r.tabulation.exhaustive_nonzero == 0 &&
      r.tabulation.random_nonzero == 0 &&
      std::all_of(r.prop2.begin(), r.prop2.end(), [](const Prop2Case& c) { return c.holds; });
  return r;
}

}  // namespace axt

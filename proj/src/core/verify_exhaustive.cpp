// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <set>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/primes.hpp"
#include "core/verify.hpp"

namespace axt {

DistinguishReport exhaustive_prob(Scheme scheme, std::uint64_t size, const ValueAssignment& v,
                                  unsigned workers) {
  if (v.empty()) fail(ErrorKind::InvalidArgument, "exhaustive_prob needs a non-zero assignment");

  ThresholdHash base;
  std::uint64_t seeds = 0;
  switch (scheme) {
    case Scheme::OddMul2w:
      if (size < 1 || size > kMaxExhaustiveW)
        fail(ErrorKind::TooLarge, "exhaustive OddMul2w supports 1 <= w <= 16");
      base = {ThresholdHash::Kind::OddMul2w, size, 1, 0};
      seeds = std::uint64_t{1} << (size - 1);
      break;
    case Scheme::ModPrime:
    case Scheme::Affine2Indep:
      if (size > kMaxExhaustivePrime)
        fail(ErrorKind::TooLarge, "exhaustive prime schemes support p <= 2^14");
      if (!is_prime(size)) fail(ErrorKind::InvalidArgument, std::to_string(size) + " is not prime");
      base = {scheme == Scheme::ModPrime ? ThresholdHash::Kind::ModPrime
                                         : ThresholdHash::Kind::Affine2Indep,
              size, 1, 0};
      seeds = scheme == Scheme::ModPrime ? size - 1 : size * size;
      break;
    default:
      fail(ErrorKind::InvalidArgument, "exhaustive_prob supports oddmul2w, modprime, affine2indep");
  }
  if (!(base.universe() == v.universe()))
    fail(ErrorKind::ShapeMismatch, "assignment universe " + v.universe().name() +
                                       " differs from scheme universe " + base.universe().name());

  auto part = [&](std::uint64_t begin, std::uint64_t end) {
    GoodMeasureEvaluator eval(v);
    ThresholdHash h = base;
    u128 total = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      switch (h.kind) {
        case ThresholdHash::Kind::OddMul2w: h.a = 2 * i + 1; break;
        case ThresholdHash::Kind::ModPrime: h.a = i + 1; break;
        case ThresholdHash::Kind::Affine2Indep:
          h.a = i / size;
          h.b = i % size;
          break;
      }
      total += eval.good_count(h);
    }
    return total;
  };

  DistinguishReport r;
  r.method = DistinguishReport::Method::Exhaustive;
  r.scheme = scheme;
  r.universe = v.universe();
  r.n = v.size();
  r.good_total = parallel_reduce<u128>(seeds, workers, part);
  r.denominator = u128{seeds} * base.range();
  r.exact = ratio(r.good_total, r.denominator);
  r.probability = to_double(*r.exact);
  r.ci_low = r.ci_high = r.probability;
  r.trials = seeds;
  return r;
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

DistinguishReport mc_prob(Scheme scheme, const SizeParams& size, const ValueAssignment& v,
                          std::uint64_t trials, std::uint64_t seed) {
  if (trials < 100) fail(ErrorKind::InvalidArgument, "mc_prob needs at least 100 trials");
  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Sampler s(random_spec(scheme, size, rng));
    if (!sampled_sum(s, v).is_zero()) ++hits;
  }
  DistinguishReport r;
  r.method = DistinguishReport::Method::MonteCarlo;
  r.scheme = scheme;
  r.universe = v.universe();
  r.n = v.size();
  r.trials = trials;
  r.hits = hits;
  r.seed = seed;
  r.probability = static_cast<double>(hits) / static_cast<double>(trials);
  std::tie(r.ci_low, r.ci_high) = wilson_interval(hits, trials);
  return r;
}

Rational theorem_bound(Scheme scheme, std::uint64_t size, std::size_t n) {
  if (scheme == Scheme::Affine2Indep) {
    const BigInt nn = BigInt(n) * n;
    const BigInt pp = BigInt(size) * size;
    return (Rational(1) - Rational(nn, pp)) / 8;
  }
  return Rational(1, 8);
}

SmallBiasReport small_bias_mc(const std::vector<std::uint64_t>& set, std::size_t d, Scheme scheme,
                              const SizeParams& size, std::uint64_t trials, std::uint64_t seed) {
  if (set.empty()) fail(ErrorKind::InvalidArgument, "small-bias check needs a non-empty set");
  if (d == 0) fail(ErrorKind::InvalidArgument, "small-bias check needs d >= 1");
  if (trials == 0) fail(ErrorKind::InvalidArgument, "small-bias check needs trials >= 1");
  if (std::set<std::uint64_t>(set.begin(), set.end()).size() != set.size())
    fail(ErrorKind::InvalidArgument, "small-bias set has repeated keys");
  SmallBiasReport r;
  r.d = d;
  r.eps = std::pow(7.0 / 8.0, static_cast<double>(d));
  r.lower = (1 - r.eps) / 2;
  r.trials = trials;
  r.seed = seed;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const VectorSampler vs = VectorSampler::random(d, scheme, size, rng);
    unsigned parity = 0;
    for (auto x : set) parity ^= small_bias_bit(vs, x) ? 1u : 0u;
    r.odd += parity;
  }
  r.estimate = static_cast<double>(r.odd) / static_cast<double>(trials);
  std::tie(r.ci_low, r.ci_high) = wilson_interval(r.odd, trials);
  return r;
}

}  // namespace axt

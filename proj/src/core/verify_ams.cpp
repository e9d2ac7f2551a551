// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>

#include "core/error.hpp"
#include "core/verify.hpp"

namespace axt {

namespace {

constexpr unsigned kIndependence = 4;

using i128 = __int128;

BigInt to_big_signed(i128 v) {
  const bool neg = v < 0;
  const u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  BigInt out = to_big(mag);
  return neg ? BigInt(-out) : out;
}

void finish_flags(MomentReport& r) {
  r.ratio = r.e_x2 > 0 ? r.e_x4 / (r.e_x2 * r.e_x2) : 0.0;
  if (r.e_x2_exact) {
    r.fourth_moment_bound = *r.e_x4_exact < 3 * (*r.e_x2_exact) * (*r.e_x2_exact);
    r.exceeds_one_third = *r.pr_nonzero_exact > Rational(1, 3);
  } else {
    r.fourth_moment_bound = r.e_x4 < 3 * r.e_x2 * r.e_x2;
    r.exceeds_one_third = r.pr_nonzero > 1.0 / 3.0;
  }
}

}  // namespace

MomentReport ams_moment_check(MomentReport::Mode mode, const std::vector<std::uint64_t>& keys,
                              const std::vector<std::int64_t>& values, const AmsParams& params) {
  if (keys.size() != values.size())
    fail(ErrorKind::ShapeMismatch, "keys and values must have the same length");
  if (keys.empty()) fail(ErrorKind::InvalidArgument, "moment check needs at least one key");
  if (std::any_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; }))
    fail(ErrorKind::InvalidArgument, "moment check values must be non-zero");
  if (std::set<std::uint64_t>(keys.begin(), keys.end()).size() != keys.size())
    fail(ErrorKind::InvalidArgument, "moment check keys must be distinct");

  MomentReport r;
  r.mode = mode;
  r.field = params.field.name();

  if (mode == MomentReport::Mode::ExactGF2e) {
    if (params.field.kind != PolyField::Kind::GF2e || params.field.param > 4)
      fail(ErrorKind::TooLarge, "exact moments need GF(2^e) with e <= 4");
    const unsigned e = params.field.param;
    const std::uint64_t q = std::uint64_t{1} << e;
    for (auto k : keys)
      if (k >= q) fail(ErrorKind::OutOfRange, "key " + std::to_string(k) + " outside GF(2^e)");
    const std::uint64_t total = std::uint64_t{1} << (kIndependence * e);

    BigInt sum2 = 0, sum4 = 0;
    std::uint64_t nonzero = 0;
    PolyKIndepSpec poly{params.field, std::vector<u128>(kIndependence), {}};
    for (std::uint64_t code = 0; code < total; ++code) {
      for (unsigned i = 0; i < kIndependence; ++i) poly.coefficients[i] = (code >> (i * e)) & (q - 1);
      const Sampler s(SamplerSpec{poly, std::nullopt});
      i128 x = 0;
      for (std::size_t j = 0; j < keys.size(); ++j)
        if (s.sample_unchecked(keys[j])) x += values[j];
      if (x != 0) ++nonzero;
      const BigInt bx = to_big_signed(x);
      const BigInt x2 = bx * bx;
      sum2 += x2;
      sum4 += x2 * x2;
    }
    r.e_x2_exact = Rational(sum2, total);
    r.e_x4_exact = Rational(sum4, total);
    r.pr_nonzero_exact = Rational(nonzero, total);
    r.e_x2 = to_double(*r.e_x2_exact);
    r.e_x4 = to_double(*r.e_x4_exact);
    r.pr_nonzero = to_double(*r.pr_nonzero_exact);
    r.trials = total;
  } else {
    if (params.trials < 100) fail(ErrorKind::InvalidArgument, "moment estimate needs >= 100 trials");
    SizeParams size;
    size.field = params.field;
    size.k = kIndependence;
    Rng rng(params.seed);
    long double sum2 = 0, sum4 = 0;
    std::uint64_t nonzero = 0;
    for (std::uint64_t t = 0; t < params.trials; ++t) {
      const Sampler s(random_spec(Scheme::PolyKIndep, size, rng));
      i128 x = 0;
      for (std::size_t j = 0; j < keys.size(); ++j)
        if (s.sample(keys[j])) x += values[j];
      if (x != 0) ++nonzero;
      const long double lx = static_cast<long double>(x);
      sum2 += lx * lx;
      sum4 += lx * lx * lx * lx;
    }
    const auto n = static_cast<long double>(params.trials);
    r.e_x2 = static_cast<double>(sum2 / n);
    r.e_x4 = static_cast<double>(sum4 / n);
    r.pr_nonzero = static_cast<double>(nonzero) / static_cast<double>(params.trials);
    r.trials = params.trials;
    r.seed = params.seed;
  }
  finish_flags(r);
  return r;
}

}  // namespace axt

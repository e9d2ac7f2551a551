// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/gf2e.hpp"
#include "core/mersenne.hpp"
#include "core/rng.hpp"
#include "core/uint128.hpp"
#include "core/universe.hpp"

namespace axt {

enum class Scheme {
  OddMul2w,
  ModPrime,
  Affine2Indep,
  PolyKIndep,
  Tabulation,
  MulShift,
  ParityConstrained,
  Prop2Counterexample,
  FullyRandom,
};

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

/// [a*x mod 2^w <= t], a odd.
struct OddMul2wSpec {
  unsigned w = 64;
  std::uint64_t a = 1;
  std::uint64_t t = 0;
};

/// [a*x mod p <= t], 1 <= a < p.
struct ModPrimeSpec {
  std::uint64_t p = 2;
  std::uint64_t a = 1;
  std::uint64_t t = 0;
};

/// [(a*x + b) mod p <= t].
struct Affine2IndepSpec {
  std::uint64_t p = 2;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t t = 0;
};

struct PolyField {
  enum class Kind { MersennePrime, GF2e };
  Kind kind = Kind::GF2e;
  /// Mersenne exponent q, or extension degree e.
  unsigned param = 4;

  std::string name() const;
  static PolyField parse(const std::string& name);
  friend bool operator==(const PolyField&, const PolyField&) = default;
};

struct OutputRule {
  enum class Kind { LowBit, Threshold };
  Kind kind = Kind::LowBit;
  u128 threshold = 0;
};

/// Random polynomial of degree k-1 with `coefficients[i]` the coefficient of
/// x^i, so the family is k-independent.
struct PolyKIndepSpec {
  PolyField field;
  std::vector<u128> coefficients;
  OutputRule rule;
};

/// c-character simple tabulation with r-bit table entries; the sampling bit is
/// the low output bit. Character i of x is bits [i*char_bits, (i+1)*char_bits).
struct TabulationSpec {
  unsigned chars = 2;
  unsigned char_bits = 8;
  unsigned out_bits = 1;
  std::vector<std::vector<std::uint64_t>> tables;
};

/// a*x >> (w-1); not a distinguisher.
struct MulShiftSpec {
  unsigned w = 64;
  std::uint64_t a = 0;
};

/// Uniform even-size subset of [u]: (u-1)-independent, never distinguishes
/// the all-ones F2 assignment.
struct ParityConstrainedSpec {
  std::vector<std::uint8_t> bits;
};

/// One drawn outcome of the 2-independent sampler that fails on reals.
/// Keys [0, 2n) form the positive half and [2n, 4n) the negative half.
struct Prop2Spec {
  enum class Outcome { None, All, Balanced };
  std::uint64_t n = 1;
  Outcome positive = Outcome::Balanced;
  Outcome negative = Outcome::Balanced;
  std::vector<std::uint8_t> bits;
};

struct FullyRandomSpec {
  std::vector<std::uint8_t> bits;
};

using SchemeParams = std::variant<OddMul2wSpec, ModPrimeSpec, Affine2IndepSpec, PolyKIndepSpec,
                                  TabulationSpec, MulShiftSpec, ParityConstrainedSpec, Prop2Spec,
                                  FullyRandomSpec>;

struct SamplerSpec {
  SchemeParams params;
  /// Set when the spec came from random_spec, so runs can be replayed.
  std::optional<std::uint64_t> seed;

  Scheme scheme() const { return static_cast<Scheme>(params.index()); }
};

/// Size parameters for random_spec; each scheme reads only its own fields.
struct SizeParams {
  unsigned w = 64;
  std::uint64_t p = 0;
  PolyField field{};
  unsigned k = 4;
  OutputRule rule{};
  unsigned chars = 2;
  unsigned char_bits = 8;
  unsigned out_bits = 1;
  std::uint64_t u = 0;
  std::uint64_t n = 1;
};

/// Draws every random parameter of `scheme` from its defining distribution.
SamplerSpec random_spec(Scheme scheme, const SizeParams& size, std::uint64_t seed);
SamplerSpec random_spec(Scheme scheme, const SizeParams& size, Rng& rng);

/// Uniform odd residue mod 2^w, as 2r+1 for uniform r in [2^(w-1)].
std::uint64_t draw_odd(Rng& rng, unsigned w);

inline std::uint64_t low_mask(unsigned w) {
  return w >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << w) - 1);
}

/// The hash half of a threshold scheme (OddMul2w, ModPrime, Affine2Indep),
/// with the threshold left free.
struct ThresholdHash {
  enum class Kind { OddMul2w, ModPrime, Affine2Indep };
  Kind kind = Kind::OddMul2w;
  /// w for OddMul2w, p otherwise.
  std::uint64_t modulus_param = 64;
  std::uint64_t a = 1;
  std::uint64_t b = 0;

  std::uint64_t operator()(std::uint64_t x) const {
    switch (kind) {
      case Kind::OddMul2w: return (a * x) & low_mask(static_cast<unsigned>(modulus_param));
      case Kind::ModPrime:
        return static_cast<std::uint64_t>((u128{a} * x) % modulus_param);
      case Kind::Affine2Indep:
        return static_cast<std::uint64_t>((u128{a} * x + b) % modulus_param);
    }
    return 0;
  }
  /// m: number of hash values and of thresholds.
  u128 range() const;
  Universe universe() const;
};

class Sampler {
 public:
  /// Validates every scheme invariant; throws Error(InvalidArgument) naming
  /// the violated one.
  explicit Sampler(SamplerSpec spec);

  const SamplerSpec& spec() const { return spec_; }
  Scheme scheme() const { return spec_.scheme(); }
  const Universe& universe() const { return universe_; }

  /// Throws Error(OutOfRange) for keys outside the universe.
  bool sample(std::uint64_t x) const;
  bool sample_unchecked(std::uint64_t x) const;

  /// Full hash value for the schemes that have one (threshold schemes, poly,
  /// tabulation, mulshift).
  u128 hash(std::uint64_t x) const;

  /// Threshold-scheme view; nullopt for other schemes.
  std::optional<ThresholdHash> threshold_hash() const;
  std::optional<std::uint64_t> threshold() const;

 private:
  SamplerSpec spec_;
  Universe universe_;
  std::optional<Gf2eField> gf2e_;
  std::optional<MersenneField> mersenne_;
  std::uint64_t mask_ = 0;
};

}  // namespace axt

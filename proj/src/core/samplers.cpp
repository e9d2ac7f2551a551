// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/samplers.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "core/error.hpp"
#include "core/primes.hpp"

namespace axt {

namespace {

constexpr std::uint64_t kMaxMaterialized = std::uint64_t{1} << 20;

constexpr std::array<const char*, 9> kSchemeNames{
    "oddmul2w", "modprime", "affine2indep", "poly", "tabulation",
    "mulshift", "parity",   "prop2",        "fullyrandom"};

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidArgument, what);
}

std::uint64_t parse_param(std::string_view text, const std::string& what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    fail(ErrorKind::Parse, "bad " + what + " '" + std::string(text) + "'");
  return v;
}

void check_bits(const std::vector<std::uint8_t>& bits, const char* scheme) {
  require(!bits.empty(), std::string(scheme) + ": universe size must be positive");
  require(bits.size() <= kMaxMaterialized,
          std::string(scheme) + ": universe size above 2^20 is not materialized");
  require(std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b <= 1; }),
          std::string(scheme) + ": bits must be 0 or 1");
}

bool half_matches(const std::uint8_t* bits, std::uint64_t n, Prop2Spec::Outcome o) {
  const auto ones = static_cast<std::uint64_t>(std::count(bits, bits + 2 * n, 1));
  switch (o) {
    case Prop2Spec::Outcome::None: return ones == 0;
    case Prop2Spec::Outcome::All: return ones == 2 * n;
    case Prop2Spec::Outcome::Balanced: return ones == n;
  }
  return false;
}

u128 field_size(const PolyField& f) {
  return f.kind == PolyField::Kind::GF2e ? (u128{1} << f.param) : ((u128{1} << f.param) - 1);
}

}  // namespace

std::string scheme_name(Scheme s) { return kSchemeNames.at(static_cast<std::size_t>(s)); }

Scheme parse_scheme(const std::string& name) {
  for (std::size_t i = 0; i < kSchemeNames.size(); ++i)
    if (name == kSchemeNames[i]) return static_cast<Scheme>(i);
  if (name == "affine") return Scheme::Affine2Indep;
  fail(ErrorKind::Parse, "unknown scheme '" + name + "'");
}

std::string PolyField::name() const {
  return (kind == Kind::GF2e ? "gf2e:" : "mersenne:") + std::to_string(param);
}

PolyField PolyField::parse(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) fail(ErrorKind::Parse, "bad field '" + name + "'");
  const auto head = name.substr(0, colon);
  const auto param = static_cast<unsigned>(parse_param(std::string_view(name).substr(colon + 1), "field parameter"));
  if (head == "gf2e") return {Kind::GF2e, param};
  if (head == "mersenne") return {Kind::MersennePrime, param};
  fail(ErrorKind::Parse, "bad field '" + name + "' (expected gf2e:<e> or mersenne:<q>)");
}

Universe Universe::power_of_two(unsigned w) {
  if (w < 1 || w > 64) fail(ErrorKind::InvalidArgument, "word size w must be in [1, 64]");
  return Universe(Kind::PowerOfTwo, w);
}

Universe Universe::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  return Universe(Kind::Prime, p);
}

Universe Universe::finite(std::uint64_t u) {
  if (u == 0) fail(ErrorKind::InvalidArgument, "universe size must be positive");
  return Universe(Kind::Finite, u);
}

u128 Universe::size() const {
  return kind_ == Kind::PowerOfTwo ? (u128{1} << param_) : u128{param_};
}

std::string Universe::name() const {
  switch (kind_) {
    case Kind::PowerOfTwo: return "pow2:" + std::to_string(param_);
    case Kind::Prime: return "prime:" + std::to_string(param_);
    case Kind::Finite: return "finite:" + std::to_string(param_);
  }
  return {};
}

Universe Universe::parse(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) fail(ErrorKind::Parse, "bad universe '" + name + "'");
  const auto head = name.substr(0, colon);
  const auto param = parse_param(std::string_view(name).substr(colon + 1), "universe parameter");
  if (head == "pow2") return power_of_two(static_cast<unsigned>(param));
  if (head == "prime") return prime(param);
  if (head == "finite") return finite(param);
  fail(ErrorKind::Parse, "bad universe '" + name + "' (expected pow2:<w>, prime:<p>, finite:<u>)");
}

u128 ThresholdHash::range() const {
  return kind == Kind::OddMul2w ? (u128{1} << modulus_param) : u128{modulus_param};
}

Universe ThresholdHash::universe() const {
  return kind == Kind::OddMul2w ? Universe::power_of_two(static_cast<unsigned>(modulus_param))
                                : Universe::prime(modulus_param);
}

std::uint64_t draw_odd(Rng& rng, unsigned w) {
  return (2 * rng.bits(w - 1) + 1) & low_mask(w);
}

SamplerSpec random_spec(Scheme scheme, const SizeParams& size, std::uint64_t seed) {
  Rng rng(seed);
  SamplerSpec spec = random_spec(scheme, size, rng);
  spec.seed = seed;
  return spec;
}

SamplerSpec random_spec(Scheme scheme, const SizeParams& size, Rng& rng) {
  SamplerSpec spec;
  switch (scheme) {
    case Scheme::OddMul2w: {
      require(size.w >= 1 && size.w <= 64, "w must be in [1, 64]");
      const std::uint64_t a = draw_odd(rng, size.w);
      spec.params = OddMul2wSpec{size.w, a, rng.bits(size.w)};
      break;
    }
    case Scheme::ModPrime: {
      require(is_prime(size.p), "p must be prime");
      const std::uint64_t a = 1 + rng.below(size.p - 1);
      spec.params = ModPrimeSpec{size.p, a, rng.below(size.p)};
      break;
    }
    case Scheme::Affine2Indep: {
      require(is_prime(size.p), "p must be prime");
      const std::uint64_t a = rng.below(size.p);
      const std::uint64_t b = rng.below(size.p);
      spec.params = Affine2IndepSpec{size.p, a, b, rng.below(size.p)};
      break;
    }
    case Scheme::PolyKIndep: {
      require(size.k >= 1, "k must be positive");
      PolyKIndepSpec poly{size.field, {}, size.rule};
      if (size.field.kind == PolyField::Kind::GF2e)
        require(size.field.param >= 1 && size.field.param <= 64, "GF(2^e) degree must be in [1, 64]");
      else
        require(is_mersenne_exponent(size.field.param), "unsupported Mersenne exponent");
      const u128 q = field_size(size.field);
      for (unsigned i = 0; i < size.k; ++i) poly.coefficients.push_back(rng.below128(q));
      spec.params = std::move(poly);
      break;
    }
    case Scheme::Tabulation: {
      require(size.char_bits >= 1 && size.char_bits <= 20, "char_bits must be in [1, 20]");
      require(size.out_bits >= 1 && size.out_bits <= 64, "out_bits must be in [1, 64]");
      TabulationSpec tab{size.chars, size.char_bits, size.out_bits, {}};
      tab.tables.resize(size.chars);
      for (auto& table : tab.tables) {
        table.resize(std::size_t{1} << size.char_bits);
        for (auto& entry : table) entry = rng.bits(size.out_bits);
      }
      spec.params = std::move(tab);
      break;
    }
    case Scheme::MulShift: {
      require(size.w >= 1 && size.w <= 64, "w must be in [1, 64]");
      spec.params = MulShiftSpec{size.w, rng.bits(size.w)};
      break;
    }
    case Scheme::ParityConstrained: {
      require(size.u >= 1 && size.u <= kMaxMaterialized, "u must be in [1, 2^20]");
      ParityConstrainedSpec parity;
      parity.bits.resize(size.u);
      std::uint8_t acc = 0;
      for (std::uint64_t i = 0; i + 1 < size.u; ++i) {
        parity.bits[i] = rng.coin() ? 1 : 0;
        acc ^= parity.bits[i];
      }
      parity.bits[size.u - 1] = acc;
      spec.params = std::move(parity);
      break;
    }
    case Scheme::Prop2Counterexample: {
      require(size.n >= 1 && 4 * size.n <= kMaxMaterialized, "n must be in [1, 2^18]");
      const std::uint64_t n = size.n;
      Prop2Spec prop{n, {}, {}, std::vector<std::uint8_t>(4 * n, 0)};
      // eps = 1/(4n): one residue of [4n] for "none", one for "all".
      auto draw_half = [&](std::uint8_t* half) {
        const std::uint64_t r = rng.below(4 * n);
        if (r == 0) return Prop2Spec::Outcome::None;
        if (r == 1) {
          std::fill(half, half + 2 * n, 1);
          return Prop2Spec::Outcome::All;
        }
        std::vector<std::uint64_t> idx(2 * n);
        std::iota(idx.begin(), idx.end(), 0);
        for (std::uint64_t i = 0; i < n; ++i) {
          std::swap(idx[i], idx[i + rng.below(2 * n - i)]);
          half[idx[i]] = 1;
        }
        return Prop2Spec::Outcome::Balanced;
      };
      prop.positive = draw_half(prop.bits.data());
      prop.negative = draw_half(prop.bits.data() + 2 * n);
      spec.params = std::move(prop);
      break;
    }
    case Scheme::FullyRandom: {
      require(size.u >= 1 && size.u <= kMaxMaterialized, "u must be in [1, 2^20]");
      FullyRandomSpec full;
      full.bits.resize(size.u);
      for (auto& b : full.bits) b = rng.coin() ? 1 : 0;
      spec.params = std::move(full);
      break;
    }
  }
  return spec;
}

Sampler::Sampler(SamplerSpec spec) : spec_(std::move(spec)), universe_(Universe::finite(1)) {
  std::visit(
      [this](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OddMul2wSpec>) {
          require(s.w >= 1 && s.w <= 64, "oddmul2w: w must be in [1, 64]");
          require(s.a % 2 == 1, "oddmul2w: multiplier must be odd");
          mask_ = low_mask(s.w);
          require(s.a <= mask_, "oddmul2w: multiplier must be below 2^w");
          require(s.t <= mask_, "oddmul2w: threshold must be below 2^w");
          universe_ = Universe::power_of_two(s.w);
        } else if constexpr (std::is_same_v<T, ModPrimeSpec>) {
          require(is_prime(s.p), "modprime: modulus " + std::to_string(s.p) + " is not prime");
          require(s.a >= 1 && s.a < s.p, "modprime: multiplier must be in [1, p)");
          require(s.t < s.p, "modprime: threshold must be below p");
          universe_ = Universe::prime(s.p);
        } else if constexpr (std::is_same_v<T, Affine2IndepSpec>) {
          require(is_prime(s.p), "affine2indep: modulus " + std::to_string(s.p) + " is not prime");
          require(s.a < s.p && s.b < s.p, "affine2indep: a and b must be below p");
          require(s.t < s.p, "affine2indep: threshold must be below p");
          universe_ = Universe::prime(s.p);
        } else if constexpr (std::is_same_v<T, PolyKIndepSpec>) {
          require(!s.coefficients.empty(), "poly: at least one coefficient required");
          if (s.field.kind == PolyField::Kind::GF2e) {
            gf2e_.emplace(s.field.param);
            universe_ = Universe::power_of_two(s.field.param);
          } else {
            mersenne_.emplace(s.field.param);
            universe_ = s.field.param == 89
                            ? Universe::power_of_two(64)
                            : Universe::prime(static_cast<std::uint64_t>(mersenne_->prime()));
          }
          const u128 q = field_size(s.field);
          for (u128 c : s.coefficients) require(c < q, "poly: coefficient outside the field");
          if (s.rule.kind == OutputRule::Kind::Threshold)
            require(s.rule.threshold < q, "poly: threshold outside the field");
        } else if constexpr (std::is_same_v<T, TabulationSpec>) {
          require(s.chars >= 2, "tabulation: at least 2 characters required");
          require(s.char_bits >= 1 && s.char_bits <= 20, "tabulation: char_bits must be in [1, 20]");
          require(s.chars * s.char_bits <= 64, "tabulation: keys wider than 64 bits");
          require(s.out_bits >= 1 && s.out_bits <= 64, "tabulation: out_bits must be in [1, 64]");
          require(s.tables.size() == s.chars, "tabulation: one table per character required");
          const std::uint64_t limit = low_mask(s.out_bits);
          for (const auto& table : s.tables) {
            require(table.size() == (std::size_t{1} << s.char_bits),
                    "tabulation: each table needs 2^char_bits entries");
            for (auto e : table) require(e <= limit, "tabulation: table entry exceeds out_bits");
          }
          mask_ = low_mask(s.char_bits);
          universe_ = Universe::power_of_two(s.chars * s.char_bits);
        } else if constexpr (std::is_same_v<T, MulShiftSpec>) {
          require(s.w >= 1 && s.w <= 64, "mulshift: w must be in [1, 64]");
          mask_ = low_mask(s.w);
          require(s.a <= mask_, "mulshift: multiplier must be below 2^w");
          universe_ = Universe::power_of_two(s.w);
        } else if constexpr (std::is_same_v<T, ParityConstrainedSpec>) {
          check_bits(s.bits, "parity");
          std::uint8_t acc = 0;
          for (auto b : s.bits) acc ^= b;
          require(acc == 0, "parity: total parity must be even");
          universe_ = Universe::finite(s.bits.size());
        } else if constexpr (std::is_same_v<T, Prop2Spec>) {
          require(s.n >= 1, "prop2: n must be positive");
          require(s.bits.size() == 4 * s.n, "prop2: expected 4n bits");
          check_bits(s.bits, "prop2");
          require(half_matches(s.bits.data(), s.n, s.positive), "prop2: positive half disagrees with its outcome");
          require(half_matches(s.bits.data() + 2 * s.n, s.n, s.negative),
                  "prop2: negative half disagrees with its outcome");
          universe_ = Universe::finite(s.bits.size());
        } else if constexpr (std::is_same_v<T, FullyRandomSpec>) {
          check_bits(s.bits, "fullyrandom");
          universe_ = Universe::finite(s.bits.size());
        }
      },
      spec_.params);
}

bool Sampler::sample(std::uint64_t x) const {
  if (!universe_.contains(x))
    fail(ErrorKind::OutOfRange, "key " + std::to_string(x) + " outside universe " + universe_.name());
  return sample_unchecked(x);
}

bool Sampler::sample_unchecked(std::uint64_t x) const {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OddMul2wSpec>) {
          return ((s.a * x) & mask_) <= s.t;
        } else if constexpr (std::is_same_v<T, ModPrimeSpec>) {
          return mul_mod(s.a, x, s.p) <= s.t;
        } else if constexpr (std::is_same_v<T, Affine2IndepSpec>) {
          return static_cast<std::uint64_t>((u128{s.a} * x + s.b) % s.p) <= s.t;
        } else if constexpr (std::is_same_v<T, PolyKIndepSpec>) {
          const u128 h = hash(x);
          return s.rule.kind == OutputRule::Kind::LowBit ? (h & 1) != 0 : h <= s.rule.threshold;
        } else if constexpr (std::is_same_v<T, TabulationSpec>) {
          return (hash(x) & 1) != 0;
        } else if constexpr (std::is_same_v<T, MulShiftSpec>) {
          return (((s.a * x) & mask_) >> (s.w - 1)) != 0;
        } else {
          return s.bits[x] != 0;
        }
      },
      spec_.params);
}

u128 Sampler::hash(std::uint64_t x) const {
  return std::visit(
      [&](const auto& s) -> u128 {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OddMul2wSpec>) {
          return (s.a * x) & mask_;
        } else if constexpr (std::is_same_v<T, ModPrimeSpec>) {
          return mul_mod(s.a, x, s.p);
        } else if constexpr (std::is_same_v<T, Affine2IndepSpec>) {
          return (u128{s.a} * x + s.b) % s.p;
        } else if constexpr (std::is_same_v<T, PolyKIndepSpec>) {
          if (gf2e_) {
            std::uint64_t h = static_cast<std::uint64_t>(s.coefficients.back());
            for (std::size_t i = s.coefficients.size() - 1; i-- > 0;)
              h = gf2e_->mul(h, x) ^ static_cast<std::uint64_t>(s.coefficients[i]);
            return h;
          }
          return mersenne_->eval(s.coefficients, x);
        } else if constexpr (std::is_same_v<T, TabulationSpec>) {
          std::uint64_t h = 0;
          for (unsigned i = 0; i < s.chars; ++i) h ^= s.tables[i][(x >> (i * s.char_bits)) & mask_];
          return h;
        } else if constexpr (std::is_same_v<T, MulShiftSpec>) {
          return (s.a * x) & mask_;
        } else {
          return s.bits[x];
        }
      },
      spec_.params);
}

std::optional<ThresholdHash> Sampler::threshold_hash() const {
  if (auto* s = std::get_if<OddMul2wSpec>(&spec_.params))
    return ThresholdHash{ThresholdHash::Kind::OddMul2w, s->w, s->a, 0};
  if (auto* s = std::get_if<ModPrimeSpec>(&spec_.params))
    return ThresholdHash{ThresholdHash::Kind::ModPrime, s->p, s->a, 0};
  if (auto* s = std::get_if<Affine2IndepSpec>(&spec_.params))
    return ThresholdHash{ThresholdHash::Kind::Affine2Indep, s->p, s->a, s->b};
  return std::nullopt;
}

std::optional<std::uint64_t> Sampler::threshold() const {
  if (auto* s = std::get_if<OddMul2wSpec>(&spec_.params)) return s->t;
  if (auto* s = std::get_if<ModPrimeSpec>(&spec_.params)) return s->t;
  if (auto* s = std::get_if<Affine2IndepSpec>(&spec_.params)) return s->t;
  return std::nullopt;
}

}  // namespace axt

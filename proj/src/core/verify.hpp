// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/distinguish.hpp"
#include "core/rational.hpp"
#include "core/samplers.hpp"

namespace axt {

// ---------------------------------------------------------------------------
// Distinguishing probability
// ---------------------------------------------------------------------------

struct DistinguishReport {
  enum class Method { Exhaustive, MonteCarlo };
  Method method = Method::Exhaustive;
  Scheme scheme = Scheme::OddMul2w;
  Universe universe = Universe::finite(1);
  std::size_t n = 0;
  /// Exact Pr[sampled sum != 0] (Exhaustive only).
  std::optional<Rational> exact;
  /// Exhaustive: sum of |GOOD| over all seeds, and (#seeds * m).
  u128 good_total = 0;
  u128 denominator = 0;
  /// Point estimate (Exhaustive: the exact value as a double).
  double probability = 0.0;
  /// 99% Wilson bounds (Exhaustive: equal to probability).
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  std::optional<std::uint64_t> seed;
};

/// Largest parameters exhaustive_prob accepts.
inline constexpr unsigned kMaxExhaustiveW = 16;
inline constexpr std::uint64_t kMaxExhaustivePrime = std::uint64_t{1} << 14;

/// Exact Pr over every hash seed and a uniform threshold that the sampled sum
/// is non-zero, as sum_seeds |GOOD| / (#seeds * m). `size` is w for OddMul2w
/// and p for ModPrime / Affine2Indep. Seeds are split into contiguous ranges
/// over `workers` threads; the reduction is an integer sum, so the result
/// does not depend on the worker count.
DistinguishReport exhaustive_prob(Scheme scheme, std::uint64_t size, const ValueAssignment& v,
                                  unsigned workers = 1);

/// Monte Carlo estimate over `trials` samplers drawn from (scheme, size).
DistinguishReport mc_prob(Scheme scheme, const SizeParams& size, const ValueAssignment& v,
                          std::uint64_t trials, std::uint64_t seed);

/// Two-sided Wilson score interval.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials,
                                          double z = 2.576);

/// Lower bound asserted for the exhaustive schemes: 1/8, or (1 - n^2/p^2)/8
/// for Affine2Indep.
Rational theorem_bound(Scheme scheme, std::uint64_t size, std::size_t n);

// ---------------------------------------------------------------------------
// Lemma checks
// ---------------------------------------------------------------------------

struct LemmaCheckResult {
  enum class Direction { Upper, Lower };
  std::string lemma;
  std::vector<std::pair<std::string, std::string>> params;
  Rational lhs;
  Rational bound;
  Direction direction = Direction::Upper;
  bool holds = false;
};

/// sum_{delta=1..k} Pr_a[|a z|_{mod 2^w} < delta] <= 2^(2-w) floor(k/2) ceil(k/2)
/// over uniform odd a, computed exactly by enumerating all 2^(w-1) multipliers.
LemmaCheckResult check_good_sum_lemma(unsigned w, std::uint64_t z, std::uint64_t k);

struct SweepResult {
  std::string lemma;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// Cases with lhs == bound.
  std::uint64_t tight = 0;
  std::optional<LemmaCheckResult> first_violation;
};

/// Every (w, z, k) with w_min <= w <= w_max, 1 <= z < 2^w, 1 <= k <= 2^w.
SweepResult sweep_good_sum_lemma(unsigned w_min, unsigned w_max, unsigned workers = 1);

enum class TailScheme { Affine2Indep, ModPrime };

/// Affine2Indep: Pr_{a,b}[l(x) >= delta] >= 1 - n(2 delta - 1)/p.
/// ModPrime:     Pr_a[l+(x) >= delta] >= 1 - 2n(delta - 1)/(p - 1).
/// l and l+ are read off the sorted hash order of S for every seed.
LemmaCheckResult check_tail_bounds(TailScheme scheme, std::uint64_t p,
                                   const std::vector<std::uint64_t>& keys, std::uint64_t x,
                                   std::uint64_t delta);

/// All S subset of [p] with 1 <= |S| <= max_set, all x in S, 1 <= delta <= max_delta.
SweepResult sweep_tail_bounds(TailScheme scheme, std::uint64_t p, std::size_t max_set,
                              std::uint64_t max_delta);

/// Good interval bounds around key index `pos` of a hash-sorted key list:
/// l = min(|L|, |R|), and l+ which uses only |R| for the first key.
struct NeighborIntervals {
  u128 left = 0;
  u128 right = 0;
  u128 ell() const { return left < right ? left : right; }
};
NeighborIntervals neighbor_intervals(const std::vector<std::uint64_t>& sorted_hashes,
                                     std::size_t pos, u128 m);

// ---------------------------------------------------------------------------
// Fourth-moment check for 4-independent bits over integer values
// ---------------------------------------------------------------------------

struct MomentReport {
  enum class Mode { ExactGF2e, MonteCarlo };
  Mode mode = Mode::ExactGF2e;
  std::string field;
  std::optional<Rational> e_x2_exact;
  std::optional<Rational> e_x4_exact;
  std::optional<Rational> pr_nonzero_exact;
  double e_x2 = 0.0;
  double e_x4 = 0.0;
  double ratio = 0.0;
  double pr_nonzero = 0.0;
  /// E[X^4] < 3 E[X^2]^2.
  bool fourth_moment_bound = false;
  /// Pr[X != 0] > 1/3.
  bool exceeds_one_third = false;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
};

struct AmsParams {
  /// Field for the degree-3 polynomial; ExactGF2e requires gf2e with e <= 4.
  PolyField field{PolyField::Kind::GF2e, 4};
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
};

/// X = sum v(x) Sample(x) with Sample the low bit of a uniformly random
/// degree-3 polynomial (4-independent bits). Values are signed integers.
MomentReport ams_moment_check(MomentReport::Mode mode, const std::vector<std::uint64_t>& keys,
                              const std::vector<std::int64_t>& values, const AmsParams& params);

// ---------------------------------------------------------------------------
// Small-bias parity estimate
// ---------------------------------------------------------------------------

struct SmallBiasReport {
  std::size_t d = 0;
  double eps = 0.0;
  double lower = 0.0;  // (1 - eps)/2
  double upper = 0.5;
  std::uint64_t trials = 0;
  std::uint64_t odd = 0;
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
};

/// Fraction of (samplers, b) draws for which SAMPLE picks an odd number of
/// keys from `set`.
SmallBiasReport small_bias_mc(const std::vector<std::uint64_t>& set, std::size_t d,
                              Scheme scheme, const SizeParams& size, std::uint64_t trials,
                              std::uint64_t seed);

// ---------------------------------------------------------------------------
// Counterexamples
// ---------------------------------------------------------------------------

struct ParityCase {
  std::uint64_t u = 0;
  std::uint64_t outcomes = 0;  // 2^(u-1) even-parity outcomes
  Rational pr_nonzero;
  bool uniform_on_u_minus_1 = false;
};

struct MulShiftCase {
  unsigned w = 8;
  std::vector<std::uint64_t> keys;
  std::uint64_t multipliers = 0;
  std::uint64_t nonzero = 0;
  Rational pr_nonzero;
};

struct TabulationCase {
  std::uint64_t exhaustive_fills = 0;
  std::uint64_t exhaustive_nonzero = 0;
  std::uint64_t random_tables = 0;
  std::uint64_t random_nonzero = 0;
};

struct Prop2Case {
  std::uint64_t n = 0;
  std::uint64_t u = 0;
  Rational eps;
  Rational marginal_min, marginal_max;
  Rational pairwise_min, pairwise_max;
  Rational pr_nonzero;          // explicit outcome enumeration
  Rational pr_nonzero_classes;  // symmetry classes
  Rational closed_form;         // 4 eps - 6 eps^2
  Rational bound;               // 4/u
  bool holds = false;
};

struct CounterexampleReport {
  std::vector<ParityCase> parity;
  MulShiftCase mulshift;
  TabulationCase tabulation;
  std::vector<Prop2Case> prop2;
  bool all_hold = false;
};

struct CounterexampleOptions {
  std::uint64_t parity_max_u = 16;
  std::uint64_t mulshift_x = 1;
  std::uint64_t mulshift_y = 2;
  std::uint64_t random_tables = 10000;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> prop2_n{2, 3, 4};
};

CounterexampleReport counterexample_suite(const CounterexampleOptions& opts = {});

/// Symmetry-class value of Pr[sum != 0] for the 2-independent construction.
Rational prop2_nonzero_by_classes(std::uint64_t n);

/// +1 on [0, 2n), -1 on [2n, 4n), as WrapInt64 over [4n].
ValueAssignment prop2_values(std::uint64_t n);

}  // namespace axt

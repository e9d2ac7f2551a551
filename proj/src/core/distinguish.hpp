// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "core/monoid.hpp"
#include "core/samplers.hpp"
#include "core/universe.hpp"

namespace axt {

/// Sparse value function v: keys -> non-zero monoid values. Zero values are
/// never stored, so size() is n = |S|.
class ValueAssignment {
 public:
  ValueAssignment(Universe universe, MonoidTag tag) : universe_(universe), tag_(tag) {}

  const Universe& universe() const { return universe_; }
  const MonoidTag& tag() const { return tag_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// v(x) = value (removes x when value is zero).
  void set(std::uint64_t key, const MonoidValue& value);
  /// v(x) += value (removes x when the sum becomes zero).
  void add(std::uint64_t key, const MonoidValue& value);
  /// v(x), or zero.
  MonoidValue get(std::uint64_t key) const;

  const std::map<std::uint64_t, MonoidValue>& entries() const { return entries_; }
  std::vector<std::uint64_t> keys() const;

  friend bool operator==(const ValueAssignment&, const ValueAssignment&) = default;

 private:
  void check(std::uint64_t key, const MonoidValue& value) const;

  Universe universe_;
  MonoidTag tag_;
  std::map<std::uint64_t, MonoidValue> entries_;
};

/// Sum of v(x) over the sampled keys; only the non-zero entries are visited.
MonoidValue sampled_sum(const Sampler& s, const ValueAssignment& v);

/// O(d) state streaming digest: one running sampled sum per sampler.
class StreamAccumulator {
 public:
  StreamAccumulator(std::vector<Sampler> samplers, MonoidTag tag);

  void update(std::uint64_t key, const MonoidValue& value);
  const std::vector<MonoidValue>& digest() const { return sums_; }
  const std::vector<Sampler>& samplers() const { return samplers_; }
  const MonoidTag& tag() const { return tag_; }

 private:
  std::vector<Sampler> samplers_;
  MonoidTag tag_;
  std::vector<MonoidValue> sums_;
};

struct GoodMeasure {
  /// Size of the threshold space.
  u128 m = 0;
  /// #{t in [m] : sampled sum at threshold t is non-zero}.
  u128 good_count = 0;
};

/// Exact |GOOD| for a fixed threshold hash by sorting the n hash values and
/// summing the lengths of intervals with non-zero prefix sum; O(n log n).
GoodMeasure good_measure(const ThresholdHash& hash, const ValueAssignment& v);

/// Reusable form of good_measure for seed-enumeration loops: the assignment
/// is flattened once and the sort buffer is reused between calls.
class GoodMeasureEvaluator {
 public:
  explicit GoodMeasureEvaluator(const ValueAssignment& v);

  u128 good_count(const ThresholdHash& hash);

 private:
  std::vector<std::uint64_t> keys_;
  std::vector<MonoidValue> values_;
  MonoidTag tag_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> order_;
};

/// d independent samplers plus d fully random bits b.
class VectorSampler {
 public:
  VectorSampler(std::vector<Sampler> samplers, std::vector<std::uint8_t> b);

  /// d samplers drawn from (scheme, size) and d fair bits, all from `rng`.
  static VectorSampler random(std::size_t d, Scheme scheme, const SizeParams& size, Rng& rng);

  std::size_t d() const { return samplers_.size(); }
  const std::vector<Sampler>& samplers() const { return samplers_; }
  const std::vector<std::uint8_t>& b() const { return b_; }
  const Universe& universe() const { return samplers_.front().universe(); }

 private:
  std::vector<Sampler> samplers_;
  std::vector<std::uint8_t> b_;
};

struct VectorSums {
  std::vector<MonoidValue> sums;
  bool all_zero = true;
};

VectorSums vector_sums(const VectorSampler& vs, const ValueAssignment& v);

/// <b, (Sample_1(x), ..., Sample_d(x))> mod 2, skipping samplers with b_i = 0.
bool small_bias_bit(const VectorSampler& vs, std::uint64_t x);

/// d = ceil(log(eps) / log(7/8)), bumped until (7/8)^d <= eps.
std::size_t samplers_for_miss_probability(double eps);

/// Default threshold family over a universe: OddMul2w for [2^w], ModPrime
/// for [p].
std::pair<Scheme, SizeParams> default_family(const Universe& u);

}  // namespace axt

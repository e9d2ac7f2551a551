// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/distinguish.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace axt {

void ValueAssignment::check(std::uint64_t key, const MonoidValue& value) const {
  if (!universe_.contains(key))
    fail(ErrorKind::OutOfRange, "key " + std::to_string(key) + " outside universe " + universe_.name());
  if (!(value.tag() == tag_))
    fail(ErrorKind::ShapeMismatch,
         "value of monoid " + value.tag().name() + " in a " + tag_.name() + " assignment");
}

void ValueAssignment::set(std::uint64_t key, const MonoidValue& value) {
  check(key, value);
  if (value.is_zero())
    entries_.erase(key);
  else
    entries_.insert_or_assign(key, value);
}

void ValueAssignment::add(std::uint64_t key, const MonoidValue& value) {
  check(key, value);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (!value.is_zero()) entries_.emplace(key, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

MonoidValue ValueAssignment::get(std::uint64_t key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? zero(tag_) : it->second;
}

std::vector<std::uint64_t> ValueAssignment::keys() const {
  std::vector<std::uint64_t> out;
  out.reserve(entries_.size());
  for (const auto& [k, _] : entries_) out.push_back(k);
  return out;
}

MonoidValue sampled_sum(const Sampler& s, const ValueAssignment& v) {
  if (!(s.universe() == v.universe()))
    fail(ErrorKind::ShapeMismatch,
         "sampler universe " + s.universe().name() + " differs from assignment universe " +
             v.universe().name());
  MonoidValue sum = zero(v.tag());
  for (const auto& [key, value] : v.entries())
    if (s.sample_unchecked(key)) sum += value;
  return sum;
}

StreamAccumulator::StreamAccumulator(std::vector<Sampler> samplers, MonoidTag tag)
    : samplers_(std::move(samplers)), tag_(tag), sums_(samplers_.size(), zero(tag)) {
  if (samplers_.empty()) fail(ErrorKind::InvalidArgument, "accumulator needs at least one sampler");
  for (const auto& s : samplers_)
    if (!(s.universe() == samplers_.front().universe()))
      fail(ErrorKind::ShapeMismatch, "accumulator samplers must share one universe");
}

void StreamAccumulator::update(std::uint64_t key, const MonoidValue& value) {
  if (!(value.tag() == tag_))
    fail(ErrorKind::ShapeMismatch, "update of monoid " + value.tag().name() + " into " + tag_.name());
  const Universe& u = samplers_.front().universe();
  if (!u.contains(key))
    fail(ErrorKind::OutOfRange, "key " + std::to_string(key) + " outside universe " + u.name());
  for (std::size_t i = 0; i < samplers_.size(); ++i)
    if (samplers_[i].sample_unchecked(key)) sums_[i] += value;
}

GoodMeasureEvaluator::GoodMeasureEvaluator(const ValueAssignment& v) : tag_(v.tag()) {
  if (v.empty()) fail(ErrorKind::InvalidArgument, "good measure needs a non-zero assignment");
  for (const auto& [k, val] : v.entries()) {
    keys_.push_back(k);
    values_.push_back(val);
  }
  order_.resize(keys_.size());
}

u128 GoodMeasureEvaluator::good_count(const ThresholdHash& hash) {
  for (std::uint32_t i = 0; i < keys_.size(); ++i) order_[i] = {hash(keys_[i]), i};
  // keys_ is ascending, so (hash, index) order is (hash, key) order.
  std::sort(order_.begin(), order_.end());
  const u128 m = hash.range();
  u128 good = 0;
  MonoidValue prefix = zero(tag_);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    prefix += values_[order_[i].second];
    if (prefix.is_zero()) continue;
    const u128 end = i + 1 < order_.size() ? u128{order_[i + 1].first} : m;
    good += end - order_[i].first;
  }
  return good;
}

GoodMeasure good_measure(const ThresholdHash& hash, const ValueAssignment& v) {
  if (!(hash.universe() == v.universe()))
    fail(ErrorKind::ShapeMismatch, "hash universe " + hash.universe().name() +
                                       " differs from assignment universe " + v.universe().name());
  GoodMeasureEvaluator eval(v);
  return {hash.range(), eval.good_count(hash)};
}

VectorSampler::VectorSampler(std::vector<Sampler> samplers, std::vector<std::uint8_t> b)
    : samplers_(std::move(samplers)), b_(std::move(b)) {
  if (samplers_.empty()) fail(ErrorKind::InvalidArgument, "vector sampler needs d >= 1");
  if (b_.size() != samplers_.size())
    fail(ErrorKind::ShapeMismatch, "vector sampler needs one bit of b per sampler");
  for (const auto& s : samplers_)
    if (!(s.universe() == samplers_.front().universe()))
      fail(ErrorKind::ShapeMismatch, "vector sampler samplers must share one universe");
  for (auto bit : b_)
    if (bit > 1) fail(ErrorKind::InvalidArgument, "b entries must be 0 or 1");
}

VectorSampler VectorSampler::random(std::size_t d, Scheme scheme, const SizeParams& size, Rng& rng) {
  std::vector<Sampler> samplers;
  samplers.reserve(d);
  for (std::size_t i = 0; i < d; ++i) samplers.emplace_back(random_spec(scheme, size, rng));
  std::vector<std::uint8_t> b(d);
  for (auto& bit : b) bit = rng.coin() ? 1 : 0;
  return VectorSampler(std::move(samplers), std::move(b));
}

VectorSums vector_sums(const VectorSampler& vs, const ValueAssignment& v) {
  VectorSums out;
  out.sums.reserve(vs.d());
  for (const auto& s : vs.samplers()) {
    out.sums.push_back(sampled_sum(s, v));
    out.all_zero = out.all_zero && out.sums.back().is_zero();
  }
  return out;
}

bool small_bias_bit(const VectorSampler& vs, std::uint64_t x) {
  if (!vs.universe().contains(x))
    fail(ErrorKind::OutOfRange, "key " + std::to_string(x) + " outside universe " + vs.universe().name());
  unsigned parity = 0;
  for (std::size_t i = 0; i < vs.d(); ++i)
    if (vs.b()[i] && vs.samplers()[i].sample_unchecked(x)) ++parity;
  return (parity & 1) != 0;
}

std::size_t samplers_for_miss_probability(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) fail(ErrorKind::InvalidArgument, "miss probability must be in (0, 1)");
  constexpr double alpha = 7.0 / 8.0;
  auto d = static_cast<std::size_t>(std::ceil(std::log(eps) / std::log(alpha)));
  if (d == 0) d = 1;
  while (std::pow(alpha, static_cast<double>(d)) > eps) ++d;
  return d;
}

std::pair<Scheme, SizeParams> default_family(const Universe& u) {
  SizeParams size;
  switch (u.kind()) {
    case Universe::Kind::PowerOfTwo:
      size.w = static_cast<unsigned>(u.param());
      return {Scheme::OddMul2w, size};
    case Universe::Kind::Prime:
      size.p = u.param();
      return {Scheme::ModPrime, size};
    case Universe::Kind::Finite: break;
  }
  fail(ErrorKind::InvalidArgument, "no threshold family over universe " + u.name());
}

}  // namespace axt

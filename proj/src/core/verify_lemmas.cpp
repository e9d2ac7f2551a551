// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/primes.hpp"
#include "core/verify.hpp"

namespace axt {

namespace {

constexpr unsigned kMaxLemmaW = 12;

// |a z|_{mod 2^w}
std::uint64_t circular_distance(std::uint64_t a, std::uint64_t z, unsigned w) {
  const std::uint64_t m = std::uint64_t{1} << w;
  const std::uint64_t r = (a * z) & (m - 1);
  return std::min(r, m - r);
}

// 2 floor(k/2) ceil(k/2): the bound scaled by 2^(w-1).
std::uint64_t scaled_good_sum_bound(std::uint64_t k) { return 2 * (k / 2) * ((k + 1) / 2); }

struct SweepCounts {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t tight = 0;
  std::optional<std::array<std::uint64_t, 3>> first;  // (w, z, k)

  friend SweepCounts operator+(const SweepCounts& a, const SweepCounts& b) {
    return {a.checked + b.checked, a.violations + b.violations, a.tight + b.tight,
            a.first ? a.first : b.first};
  }
};

}  // namespace

LemmaCheckResult check_good_sum_lemma(unsigned w, std::uint64_t z, std::uint64_t k) {
  if (w < 1 || w > kMaxLemmaW) fail(ErrorKind::OutOfRange, "good-sum lemma check supports 1 <= w <= 12");
  const std::uint64_t m = std::uint64_t{1} << w;
  if (z < 1 || z >= m) fail(ErrorKind::OutOfRange, "z must be in [1, 2^w)");
  if (k < 1 || k > m) fail(ErrorKind::OutOfRange, "k must be in [1, 2^w]");

  // Each odd a contributes to every delta in (|az|, k].
  std::uint64_t num = 0;
  for (std::uint64_t a = 1; a < m; a += 2) {
    const std::uint64_t d = circular_distance(a, z, w);
    if (d < k) num += k - d;
  }
  LemmaCheckResult r;
  r.lemma = "good-sum";
  r.params = {{"w", std::to_string(w)}, {"z", std::to_string(z)}, {"k", std::to_string(k)}};
  r.direction = LemmaCheckResult::Direction::Upper;
  r.lhs = Rational(num, m / 2);
  r.bound = Rational(BigInt(4) * (k / 2) * ((k + 1) / 2), m);
  r.holds = r.lhs <= r.bound;
  return r;
}

SweepResult sweep_good_sum_lemma(unsigned w_min, unsigned w_max, unsigned workers) {
  if (w_min < 1 || w_max > kMaxLemmaW || w_min > w_max)
    fail(ErrorKind::OutOfRange, "good-sum sweep supports 1 <= w_min <= w_max <= 12");
  SweepCounts total;
  for (unsigned w = w_min; w <= w_max; ++w) {
    const std::uint64_t m = std::uint64_t{1} << w;
    auto part = [&](std::uint64_t begin, std::uint64_t end) {
      SweepCounts c;
      std::vector<std::uint64_t> hist(m / 2 + 1);
      for (std::uint64_t z = begin + 1; z <= end; ++z) {
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint64_t a = 1; a < m; a += 2) ++hist[circular_distance(a, z, w)];
        // num(k) = sum_a max(0, k - d_a); num(k+1) = num(k) + #{a : d_a <= k}.
        std::uint64_t num = 0;
        std::uint64_t at_most = 0;
        for (std::uint64_t k = 1; k <= m; ++k) {
          if (k - 1 < hist.size()) at_most += hist[k - 1];
          num += at_most;
          const std::uint64_t bound = scaled_good_sum_bound(k);
          ++c.checked;
          if (num == bound) ++c.tight;
          if (num > bound) {
            ++c.violations;
            if (!c.first) c.first = std::array<std::uint64_t, 3>{w, z, k};
          }
        }
      }
      return c;
    };
    total = total + parallel_reduce<SweepCounts>(m - 1, workers, part);
  }
  SweepResult r;
  r.lemma = "good-sum";
  r.checked = total.checked;
  r.violations = total.violations;
  r.tight = total.tight;
  if (total.first)
    r.first_violation = check_good_sum_lemma(static_cast<unsigned>((*total.first)[0]),
                                             (*total.first)[1], (*total.first)[2]);
  return r;
}

NeighborIntervals neighbor_intervals(const std::vector<std::uint64_t>& sorted_hashes,
                                     std::size_t pos, u128 m) {
  NeighborIntervals out;
  const u128 h = sorted_hashes[pos];
  out.left = pos == 0 ? h : h - sorted_hashes[pos - 1];
  out.right = pos + 1 == sorted_hashes.size() ? m - h : sorted_hashes[pos + 1] - h;
  return out;
}

namespace {

struct TailSetup {
  ThresholdHash base;
  std::uint64_t seeds = 0;
};

TailSetup tail_setup(TailScheme scheme, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (p > kMaxExhaustivePrime) fail(ErrorKind::TooLarge, "tail-bound checks support p <= 2^14");
  if (scheme == TailScheme::Affine2Indep)
    return {{ThresholdHash::Kind::Affine2Indep, p, 0, 0}, p * p};
  return {{ThresholdHash::Kind::ModPrime, p, 1, 0}, p - 1};
}

void set_seed(ThresholdHash& h, std::uint64_t i) {
  if (h.kind == ThresholdHash::Kind::Affine2Indep) {
    h.a = i / h.modulus_param;
    h.b = i % h.modulus_param;
  } else {
    h.a = i + 1;
  }
}

// For every seed, the good-interval lower bound (l or l+) of each key of S,
// passed to `visit(index_in_keys, value)`.
template <typename Visit>
void for_each_seed_bound(TailScheme scheme, const TailSetup& setup,
                         const std::vector<std::uint64_t>& keys, Visit visit) {
  ThresholdHash h = setup.base;
  const u128 m = h.range();
  std::vector<std::pair<std::uint64_t, std::size_t>> order(keys.size());
  std::vector<std::uint64_t> sorted(keys.size());
  for (std::uint64_t i = 0; i < setup.seeds; ++i) {
    set_seed(h, i);
    for (std::size_t j = 0; j < keys.size(); ++j) order[j] = {h(keys[j]), j};
    std::sort(order.begin(), order.end(),
              [&](const auto& l, const auto& r) {
                return l.first != r.first ? l.first < r.first : keys[l.second] < keys[r.second];
              });
    for (std::size_t j = 0; j < keys.size(); ++j) sorted[j] = order[j].first;
    for (std::size_t pos = 0; pos < keys.size(); ++pos) {
      const NeighborIntervals nb = neighbor_intervals(sorted, pos, m);
      const u128 bound = (scheme == TailScheme::ModPrime && pos == 0) ? nb.right : nb.ell();
      visit(order[pos].second, bound);
    }
  }
}

Rational tail_bound(TailScheme scheme, std::uint64_t p, std::size_t n, std::uint64_t delta) {
  if (scheme == TailScheme::Affine2Indep)
    return Rational(1) - Rational(BigInt(n) * (2 * delta - 1), p);
  return Rational(1) - Rational(BigInt(2) * n * (delta - 1), p - 1);
}

const char* tail_name(TailScheme scheme) {
  return scheme == TailScheme::Affine2Indep ? "prob-2-ind" : "prob-ax-p";
}

}  // namespace

LemmaCheckResult check_tail_bounds(TailScheme scheme, std::uint64_t p,
                                   const std::vector<std::uint64_t>& keys, std::uint64_t x,
                                   std::uint64_t delta) {
  const TailSetup setup = tail_setup(scheme, p);
  if (keys.empty()) fail(ErrorKind::InvalidArgument, "key set must be non-empty");
  std::vector<std::uint64_t> sorted_keys = keys;
  std::sort(sorted_keys.begin(), sorted_keys.end());
  if (std::adjacent_find(sorted_keys.begin(), sorted_keys.end()) != sorted_keys.end())
    fail(ErrorKind::InvalidArgument, "key set has repeated keys");
  for (auto k : keys)
    if (k >= p) fail(ErrorKind::OutOfRange, "key " + std::to_string(k) + " outside [p]");
  auto it = std::find(keys.begin(), keys.end(), x);
  if (it == keys.end()) fail(ErrorKind::InvalidArgument, "x must be a member of S");
  if (delta < 1) fail(ErrorKind::OutOfRange, "delta must be positive");
  const std::size_t target = static_cast<std::size_t>(it - keys.begin());

  std::uint64_t hits = 0;
  for_each_seed_bound(scheme, setup, keys, [&](std::size_t idx, u128 value) {
    if (idx == target && value >= delta) ++hits;
  });

  LemmaCheckResult r;
  r.lemma = tail_name(scheme);
  std::string set;
  for (std::size_t i = 0; i < keys.size(); ++i) set += (i ? "," : "") + std::to_string(keys[i]);
  r.params = {{"p", std::to_string(p)}, {"S", set}, {"x", std::to_string(x)},
              {"delta", std::to_string(delta)}};
  r.direction = LemmaCheckResult::Direction::Lower;
  r.lhs = Rational(hits, setup.seeds);
  r.bound = tail_bound(scheme, p, keys.size(), delta);
  r.holds = r.lhs >= r.bound;
  return r;
}

SweepResult sweep_tail_bounds(TailScheme scheme, std::uint64_t p, std::size_t max_set,
                              std::uint64_t max_delta) {
  const TailSetup setup = tail_setup(scheme, p);
  if (max_set < 1 || max_set > p) fail(ErrorKind::OutOfRange, "max_set must be in [1, p]");
  if (max_delta < 1) fail(ErrorKind::OutOfRange, "max_delta must be positive");

  SweepResult r;
  r.lemma = tail_name(scheme);
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> counts;
  std::function<void(std::uint64_t)> recurse = [&](std::uint64_t next) {
    if (!keys.empty()) {
      counts.assign(keys.size() * max_delta, 0);
      for_each_seed_bound(scheme, setup, keys, [&](std::size_t idx, u128 value) {
        const u128 full = value < max_delta ? value : u128{max_delta};
        for (std::uint64_t d = 1; d <= full; ++d) ++counts[idx * max_delta + d - 1];
      });
      for (std::size_t idx = 0; idx < keys.size(); ++idx) {
        for (std::uint64_t d = 1; d <= max_delta; ++d) {
          const Rational lhs(counts[idx * max_delta + d - 1], setup.seeds);
          const Rational bound = tail_bound(scheme, p, keys.size(), d);
          ++r.checked;
          if (lhs == bound) ++r.tight;
          if (lhs < bound) {
            ++r.violations;
            if (!r.first_violation)
              r.first_violation = check_tail_bounds(scheme, p, keys, keys[idx], d);
          }
        }
      }
    }
    if (keys.size() == max_set) return;
    for (std::uint64_t k = next; k < p; ++k) {
      keys.push_back(k);
      recurse(k + 1);
      keys.pop_back();
    }
  };
  recurse(0);
  return r;
}

}  // namespace axt

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/corpus.hpp"

#include <array>
#include <bit>
#include <set>
#include <utility>

#include "core/rng.hpp"

namespace axt {

namespace {

constexpr std::uint64_t kF2SeedBase = 0x5eed0000;
constexpr std::uint64_t kIntSeedBase = 0x5eed1000;

}  // namespace

std::vector<CorpusEntry> builtin_corpus(const Universe& u) {
  unsigned width = 0;
  if (u.kind() == Universe::Kind::PowerOfTwo)
    width = static_cast<unsigned>(u.param());
  else
    width = static_cast<unsigned>(std::bit_width(u.param()) - 1);
  const unsigned key_width = std::min(width, 63u);
  const std::uint64_t key_space = std::uint64_t{1} << key_width;

  std::vector<CorpusEntry> corpus;
  for (std::uint64_t n : {1, 2, 3, 4, 8, 16, 32, 64}) {
    if (n > key_space) continue;
    ValueAssignment v(u, MonoidTag::f2());
    for (std::uint64_t x = 0; x < n; ++x) v.set(x, MonoidValue::bit(true));
    corpus.push_back({"ones/" + std::to_string(n), std::move(v)});
  }

  if (width >= 2) {
    const std::uint64_t half = std::uint64_t{1} << (width - 1);
    constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, 4> kPairs{
        {{0, 1}, {1, 2}, {3, 77}, {5, 100}}};
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (auto [x, y] : kPairs) {
      x %= half;
      y %= half;
      if (x == y || !seen.insert({x, y}).second) continue;
      ValueAssignment v(u, MonoidTag::f2());
      for (auto k : {x, x + half, y, y + half}) v.set(k, MonoidValue::bit(true));
      corpus.push_back({"msb/" + std::to_string(x) + "," + std::to_string(y), std::move(v)});
    }
  }

  auto distinct_keys = [&](Rng& rng, std::uint64_t n) {
    std::set<std::uint64_t> keys;
    while (keys.size() < n) keys.insert(rng.below(key_space));
    return keys;
  };

  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(kF2SeedBase + i);
    const std::uint64_t n = 1 + rng.below(std::min<std::uint64_t>(48, key_space));
    ValueAssignment v(u, MonoidTag::f2());
    for (auto k : distinct_keys(rng, n)) v.set(k, MonoidValue::bit(true));
    corpus.push_back({"f2/" + std::to_string(i), std::move(v)});
  }

  // Small signed values make cancellation between keys likely.
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng(kIntSeedBase + i);
    const std::uint64_t n = 1 + rng.below(std::min<std::uint64_t>(24, key_space));
    ValueAssignment v(u, MonoidTag::wrap_int64());
    for (auto k : distinct_keys(rng, n)) {
      const auto magnitude = static_cast<std::int64_t>(1 + rng.below(3));
      const std::int64_t value = rng.coin() ? magnitude : -magnitude;
      v.set(k, MonoidValue::int64(static_cast<std::uint64_t>(value)));
    }
    corpus.push_back({"int64/" + std::to_string(i), std::move(v)});
  }
  return corpus;
}

}  // namespace axt

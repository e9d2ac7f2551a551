// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "core/apps.hpp"
#include "core/error.hpp"
#include "core/rational.hpp"

using namespace axt;

namespace {

Matrix random_matrix(std::size_t n, Rng& rng) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.next();
  return m;
}

// Fraction of all (a, t) at w = 8 whose round rejects.
Rational enumerate_rejection(const Matrix& a, const Matrix& b, const Matrix& c) {
  std::uint64_t rejects = 0;
  for (std::uint64_t m = 1; m < 256; m += 2)
    for (std::uint64_t t = 0; t < 256; ++t)
      rejects += freivald_round_rejects(a, b, c, Sampler(SamplerSpec{OddMul2wSpec{8, m, t}, std::nullopt}));
  return Rational(rejects, 128 * 256);
}

}  // namespace

TEST_SUITE("apps") {

TEST_CASE("matrix product matches the definition") {
  Rng rng(1);
  const auto a = random_matrix(5, rng), b = random_matrix(5, rng);
  const auto c = a * b;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < 5; ++k) s += a.at(i, k) * b.at(k, j);
      CHECK(c.at(i, j) == s);
    }
  CHECK(Matrix::identity(5) * a == a);
  CHECK_THROWS_AS(Matrix(0), Error);
  CHECK_THROWS_AS(Matrix(2, {1, 2, 3}), Error);
}

TEST_CASE("standard key widths") {
  CHECK(standard_key_width(1) == 8);
  CHECK(standard_key_width(256) == 8);
  CHECK(standard_key_width(257) == 16);
  CHECK(standard_key_width(70000) == 32);
  CHECK(standard_key_width(std::uint64_t{1} << 33) == 64);
}

TEST_CASE("Freivald accepts true products") {
  const auto i2 = Matrix::identity(2);
  CHECK(freivald_verify(i2, i2, i2, 64, 1).accept);
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(32);
    const auto a = random_matrix(n, rng), b = random_matrix(n, rng);
    const auto r = freivald_verify(a, b, a * b, 4, rng.next());
    REQUIRE(r.accept);
    REQUIRE(r.rounds == 4);
  }
}

TEST_CASE("Freivald single-round rejection by enumeration") {
  // n = 1: key 0 is always sampled, so s = (1) in every round.
  const Matrix a(1, {2}), b(1, {3}), c(1, {7});
  CHECK(enumerate_rejection(a, b, c) == 1);
  // A corrupted entry in column 1 is seen exactly when key 1 is sampled,
  // i.e. with probability Pr[t >= a mod 2^8] = 1/2.
  const auto i2 = Matrix::identity(2);
  Matrix bad = i2;
  bad.at(0, 1) = 5;
  CHECK(enumerate_rejection(i2, i2, bad) == Rational(1, 2));
  // Every single-entry corruption of a 4x4 identity is caught with
  // probability at least 1/8.
  const auto i4 = Matrix::identity(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Matrix c4 = i4;
      c4.at(i, j) += 1;
      CHECK(enumerate_rejection(i4, i4, c4) >= Rational(1, 8));
    }
}

TEST_CASE("Freivald finds a corrupted entry") {
  const auto i2 = Matrix::identity(2);
  Matrix bad = i2;
  bad.at(1, 0) ^= 1;
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = freivald_verify(i2, i2, bad, 64, seed);
    if (!r.accept) {
      ++rejected;
      CHECK(r.rejecting_round);
      CHECK(*r.rejecting_round + 1 == r.rounds);
    }
  }
  CHECK(rejected >= 99);
  CHECK_THROWS_AS(freivald_verify(i2, Matrix::identity(3), i2, 1, 0), Error);
  CHECK_THROWS_AS(freivald_verify(i2, i2, i2, 0, 0), Error);
}

TEST_CASE("stream test") {
  const Universe u = Universe::power_of_two(16);
  ValueAssignment claimed(u, MonoidTag::f2());
  claimed.set(10, MonoidValue::bit(true));
  claimed.set(20, MonoidValue::bit(true));
  const std::vector<StreamUpdate> exact{{10, MonoidValue::bit(true)},
                                        {30, MonoidValue::bit(true)},
                                        {20, MonoidValue::bit(true)},
                                        {30, MonoidValue::bit(true)}};
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(stream_equal_test(exact, claimed, 8, seed).equal_sofar);

  auto extra = exact;
  extra.push_back({40, MonoidValue::bit(true)});
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) mismatches += !stream_equal_test(extra, claimed, 64, seed).equal_sofar;
  CHECK(mismatches >= 99);

  const ValueAssignment empty(u, MonoidTag::wrap_int64());
  const auto r = stream_equal_test({}, empty, 4, 0);
  CHECK(r.equal_sofar);
  CHECK(r.stream_digest.size() == 4);
  CHECK_THROWS_AS(stream_equal_test({}, empty, 0, 0), Error);
}

TEST_CASE("stream test is order-insensitive") {
  Rng rng(4);
  const Universe u = Universe::power_of_two(64);
  ValueAssignment claimed(u, MonoidTag::wrap_int64());
  std::vector<StreamUpdate> stream;
  for (int i = 0; i < 30; ++i) {
    const std::uint64_t key = rng.below(6);
    const auto value = MonoidValue::int64(rng.below(5) - 2);
    stream.push_back({key, value});
    claimed.add(key, value);
  }
  const auto forward = stream_equal_test(stream, claimed, 16, 9);
  std::reverse(stream.begin(), stream.end());
  const auto backward = stream_equal_test(stream, claimed, 16, 9);
  CHECK(forward.equal_sofar);
  CHECK(forward.stream_digest == backward.stream_digest);
}

TEST_CASE("tree edge test") {
  // Path 0-1-2-3.
  const std::vector<std::pair<std::size_t, std::size_t>> path{{0, 1}, {1, 2}, {2, 3}};
  const Graph spanning(4, path, {0, 1, 2, 3});
  const Graph none(4, path, {});
  const Graph single(2, {{0, 1}}, {0});
  CHECK(spanning.edge_values().empty());
  CHECK(none.edge_values().empty());
  CHECK(single.edge_values().size() == 1);
  const Graph loop(2, {{0, 0}, {0, 1}}, {0, 1});
  CHECK(loop.edge_values().empty());
  int detected = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK_FALSE(tree_edge_test(spanning, 64, seed).edge_leaving_detected);
    CHECK_FALSE(tree_edge_test(none, 64, seed).edge_leaving_detected);
    detected += tree_edge_test(single, 64, seed).edge_leaving_detected;
  }
  CHECK(detected >= 99);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}, {}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {5}), Error);
}

}  // TEST_SUITE

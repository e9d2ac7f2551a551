// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "core/bench.hpp"
#include "core/error.hpp"
#include "core/mersenne.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"

using namespace axt;

TEST_SUITE("bench") {

TEST_CASE("report has the five subjects") {
  const auto r = run_bench(kMinBenchIterations, 3);
  REQUIRE(r.subjects.size() == 5);
  CHECK(r.subjects[0].name == "a*x<=t");
  CHECK(r.subjects[4].name == "7-indep poly mod 2^89-1");
  for (const auto& s : r.subjects) {
    CHECK(s.iterations == kMinBenchIterations);
    CHECK(s.ns_per_op > 0);
  }
  CHECK(r.sampler_spot_check);
  CHECK(r.poly_spot_check);
  CHECK(r.stride % 2 == 1);
  CHECK(format_bench_table(r).find("ns/op") != std::string::npos);
}

TEST_CASE("same seed gives the same subjects and sinks") {
  const auto a = run_bench(kMinBenchIterations, 8), b = run_bench(kMinBenchIterations, 8);
  REQUIRE(a.subjects.size() == b.subjects.size());
  for (std::size_t i = 0; i < a.subjects.size(); ++i) {
    CHECK(a.subjects[i].name == b.subjects[i].name);
    CHECK(a.subjects[i].iterations == b.subjects[i].iterations);
    CHECK(a.subjects[i].sink == b.subjects[i].sink);
  }
  CHECK_THROWS_AS(run_bench(10, 1), Error);
}

TEST_CASE("benchmark polynomial matches big integers") {
  Rng rng(5);
  const BigInt p = to_big(kMersenne89);
  for (int trial = 0; trial < 100; ++trial) {
    u128 c[7];
    for (auto& x : c) x = rng.below128(kMersenne89);
    const std::uint64_t x = rng.next();
    BigInt acc = 0;
    for (int i = 6; i >= 0; --i) acc = (acc * x + to_big(c[i])) % p;
    REQUIRE(to_big(bench_poly_eval(c, x)) == acc);
  }
}

}  // TEST_SUITE

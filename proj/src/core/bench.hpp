// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/uint128.hpp"

namespace axt {

struct BenchSubject {
  std::string name;
  std::uint64_t iterations = 0;
  std::uint64_t total_ns = 0;
  double ns_per_op = 0.0;
  /// Accumulated output, reported so the loop cannot be discarded.
  std::uint64_t sink = 0;
};

struct BenchReport {
  std::vector<BenchSubject> subjects;
  std::uint64_t seed = 0;
  std::uint64_t stride = 0;
  std::string cpu;
  std::string note;
  /// Pre-timing agreement with the library sampler and a big-integer oracle.
  bool sampler_spot_check = false;
  bool poly_spot_check = false;
};

inline constexpr std::uint64_t kMinBenchIterations = 1'000'000;

/// Times the five subjects at w = 64 with keys advanced by a fixed random
/// 64-bit stride. Single-threaded.
BenchReport run_bench(std::uint64_t iterations, std::uint64_t seed);

/// Degree-6 polynomial mod 2^89-1 evaluated with the benchmark's own routine.
u128 bench_poly_eval(const u128 (&coeffs)[7], std::uint64_t x);

std::string format_bench_table(const BenchReport& r);

}  // namespace axt

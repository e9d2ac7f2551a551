// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include "core/error.hpp"
#include "core/mersenne.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"
#include "core/samplers.hpp"

namespace axt {

namespace {

template <typename T>
inline void do_not_optimize(T const& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

std::string cpu_string() {
  std::ifstream in("/proc/cpuinfo");
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        auto s = line.substr(colon + 1);
        s.erase(0, s.find_first_not_of(" \t"));
        return s;
      }
    }
  }
  return "unknown";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::uint64_t elapsed_ns() const {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                          std::chrono::steady_clock::now() - start)
                                          .count());
  }
};

BenchSubject finish(std::string name, std::uint64_t iterations, std::uint64_t ns,
                    std::uint64_t sink) {
  return {std::move(name), iterations, ns, static_cast<double>(ns) / iterations, sink};
}

// Each loop is kept out of line so the subjects compile independently.

[[gnu::noinline]] std::uint64_t loop_threshold(std::uint64_t a, std::uint64_t t,
                                               std::uint64_t x, std::uint64_t stride,
                                               std::uint64_t iterations) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < iterations; ++i) {
    count += (a * x <= t);
    x += stride;
  }
  return count;
}

[[gnu::noinline]] std::uint64_t loop_shift(std::uint64_t a, std::uint64_t x,
                                           std::uint64_t stride, std::uint64_t iterations) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < iterations; ++i) {
    count += (a * x) >> 63;
    x += stride;
  }
  return count;
}

[[gnu::noinline]] std::uint64_t loop_threshold_acc(std::uint64_t a, std::uint64_t t,
                                                   std::uint64_t x, std::uint64_t stride,
                                                   std::uint64_t iterations) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i < iterations; ++i) {
    if (a * x <= t) s += x;
    x += stride;
  }
  return s;
}

[[gnu::noinline]] std::uint64_t loop_shift_acc(std::uint64_t a, std::uint64_t x,
                                               std::uint64_t stride, std::uint64_t iterations) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i < iterations; ++i) {
    if ((a * x) >> 63) s += x;
    x += stride;
  }
  return s;
}

[[gnu::noinline]] std::uint64_t loop_poly(const u128 (&coeffs)[7], std::uint64_t x,
                                          std::uint64_t stride, std::uint64_t iterations) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i < iterations; ++i) {
    s += static_cast<std::uint64_t>(bench_poly_eval(coeffs, x));
    x += stride;
  }
  return s;
}

BigInt big_poly(const u128 (&coeffs)[7], std::uint64_t x) {
  const BigInt p = to_big(kMersenne89);
  BigInt acc = 0;
  for (int i = 6; i >= 0; --i) acc = (acc * x + to_big(coeffs[i])) % p;
  return acc;
}

}  // namespace

u128 bench_poly_eval(const u128 (&coeffs)[7], std::uint64_t x) {
  u128 h = coeffs[6];
  for (int i = 5; i >= 0; --i) {
    h = mul_mod_m89(h, x) + coeffs[i];
    if (h >= kMersenne89) h -= kMersenne89;
  }
  return h;
}

BenchReport run_bench(std::uint64_t iterations, std::uint64_t seed) {
  if (iterations < kMinBenchIterations)
    fail(ErrorKind::InvalidArgument, "bench: iterations must be at least 1000000");
  Rng rng(seed);
  BenchReport r;
  r.seed = seed;
  r.cpu = cpu_string();
  r.note = "absolute times are machine-specific";
  r.stride = rng.next() | 1;
  const std::uint64_t x0 = rng.next();
  const std::uint64_t a = draw_odd(rng, 64);
  const std::uint64_t t = rng.next();
  const std::uint64_t shift_a = rng.next();
  u128 coeffs[7];
  for (auto& c : coeffs) c = rng.below128(kMersenne89);

  const Sampler lib(SamplerSpec{OddMul2wSpec{64, a, t}, seed});
  r.sampler_spot_check = true;
  std::uint64_t x = x0;
  for (int i = 0; i < 10000; ++i, x += r.stride)
    if (lib.sample(x) != (a * x <= t)) r.sampler_spot_check = false;
  r.poly_spot_check = true;
  x = x0;
  for (int i = 0; i < 100; ++i, x += r.stride)
    if (to_big(bench_poly_eval(coeffs, x)) != big_poly(coeffs, x)) r.poly_spot_check = false;

  auto time = [&](const char* name, auto&& body) {
    Timer timer;
    const std::uint64_t sink = body();
    const std::uint64_t ns = timer.elapsed_ns();
    do_not_optimize(sink);
    r.subjects.push_back(finish(name, iterations, ns, sink));
  };
  time("a*x<=t", [&] { return loop_threshold(a, t, x0, r.stride, iterations); });
  time("a*x>>63", [&] { return loop_shift(shift_a, x0, r.stride, iterations); });
  time("if (a*x<=t) S+=x", [&] { return loop_threshold_acc(a, t, x0, r.stride, iterations); });
  time("if (a*x>>63) S+=x", [&] { return loop_shift_acc(shift_a, x0, r.stride, iterations); });
  time("7-indep poly mod 2^89-1", [&] { return loop_poly(coeffs, x0, r.stride, iterations); });
  return r;
}

std::string format_bench_table(const BenchReport& r) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-26s %12s %14s %10s\n", "subject", "iterations", "total ns",
                "ns/op");
  out += buf;
  for (const auto& s : r.subjects) {
    std::snprintf(buf, sizeof buf, "%-26s %12llu %14llu %10.3f\n", s.name.c_str(),
                  static_cast<unsigned long long>(s.iterations),
                  static_cast<unsigned long long>(s.total_ns), s.ns_per_op);
    out += buf;
  }
  out += "cpu: " + r.cpu + "\n";
  return out;
}

}  // namespace axt

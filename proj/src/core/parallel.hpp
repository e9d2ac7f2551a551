// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace axt {

/// Splits [0, count) into `workers` contiguous ranges, runs `part(begin, end)`
/// on each and combines the partial results with `+` in range order.
template <typename T, typename Part>
T parallel_reduce(std::uint64_t count, unsigned workers, Part part) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < workers) return part(std::uint64_t{0}, count);
  std::vector<T> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) {
    const std::uint64_t begin = count * i / workers;
    const std::uint64_t end = count * (i + 1) / workers;
    threads.emplace_back([&, i, begin, end] { partial[i] = part(begin, end); });
  }
  for (auto& t : threads) t.join();
  T total{};
  for (auto& p : partial) total = total + p;
  return total;
}

}  // namespace axt

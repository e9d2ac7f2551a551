// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace axt {

/// Trial division below 2^31; deterministic Miller-Rabin (first twelve prime
/// bases, exact for all 64-bit inputs) above that.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

}  // namespace axt

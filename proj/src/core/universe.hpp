// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "core/uint128.hpp"

namespace axt {

/// Key universe: [2^w] for 1 <= w <= 64, [p] for a prime p, or [u] for the
/// materialized desk-scale schemes.
class Universe {
 public:
  enum class Kind { PowerOfTwo, Prime, Finite };

  static Universe power_of_two(unsigned w);
  static Universe prime(std::uint64_t p);
  static Universe finite(std::uint64_t u);

  Kind kind() const { return kind_; }
  /// w for PowerOfTwo, p for Prime, u for Finite.
  std::uint64_t param() const { return param_; }
  u128 size() const;
  bool contains(std::uint64_t key) const {
    return kind_ == Kind::PowerOfTwo ? (param_ >= 64 || key < (std::uint64_t{1} << param_))
                                     : key < param_;
  }

  /// "pow2:<w>", "prime:<p>" or "finite:<u>".
  std::string name() const;
  static Universe parse(const std::string& name);

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  Universe(Kind kind, std::uint64_t param) : kind_(kind), param_(param) {}

  Kind kind_;
  std::uint64_t param_;
};

}  // namespace axt

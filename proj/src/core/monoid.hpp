// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace axt {

/// The commutative monoids values are summed in: F2 (xor), 64-bit integers
/// with wrap-around addition, and fixed-length vectors of those.
class MonoidTag {
 public:
  enum class Kind { F2, WrapInt64, IntVector };

  static MonoidTag f2() { return MonoidTag(Kind::F2, 1); }
  static MonoidTag wrap_int64() { return MonoidTag(Kind::WrapInt64, 1); }
  static MonoidTag int_vector(std::size_t length);

  Kind kind() const { return kind_; }
  /// Number of 64-bit lanes in the payload (1 for the scalar monoids).
  std::size_t lanes() const { return lanes_; }

  /// "f2", "int64" or "vec:<len>".
  std::string name() const;
  static MonoidTag parse(const std::string& name);

  friend bool operator==(const MonoidTag&, const MonoidTag&) = default;

 private:
  MonoidTag(Kind kind, std::size_t lanes) : kind_(kind), lanes_(lanes) {}

  Kind kind_;
  std::size_t lanes_;
};

class MonoidValue {
 public:
  MonoidValue() : MonoidValue(MonoidTag::f2()) {}
  explicit MonoidValue(MonoidTag tag);

  static MonoidValue bit(bool b);
  static MonoidValue int64(std::uint64_t v);
  static MonoidValue vector(std::vector<std::uint64_t> lanes);
  /// Builds a value of `tag` from raw lanes; F2 lanes must be 0 or 1.
  static MonoidValue from_lanes(const MonoidTag& tag,
                                std::span<const std::uint64_t> lanes);

  const MonoidTag& tag() const { return tag_; }
  std::span<const std::uint64_t> lanes() const;
  std::uint64_t scalar() const { return scalar_; }

  /// In-place `*this = *this + other`.
  MonoidValue& operator+=(const MonoidValue& other);

  bool is_zero() const;

  /// Stream-format rendering: 0/1, decimal, or comma-separated decimals.
  std::string to_string() const;
  static MonoidValue parse(const MonoidTag& tag, const std::string& text);

  friend bool operator==(const MonoidValue& a, const MonoidValue& b);

 private:
  MonoidTag tag_;
  std::uint64_t scalar_ = 0;
  std::vector<std::uint64_t> vec_;
};

MonoidValue zero(const MonoidTag& tag);
MonoidValue combine(const MonoidValue& a, const MonoidValue& b);
inline bool is_zero(const MonoidValue& a) { return a.is_zero(); }

}  // namespace axt

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/monoid.hpp"

#include <algorithm>
#include <charconv>

#include "core/error.hpp"

namespace axt {

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  if (!text.empty() && text.front() == '-') {
    std::int64_t s = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), s);
    if (ec != std::errc() || p != text.data() + text.size())
      fail(ErrorKind::Parse, "bad integer '" + std::string(text) + "'");
    return static_cast<std::uint64_t>(s);
  }
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    fail(ErrorKind::Parse, "bad integer '" + std::string(text) + "'");
  return v;
}

}  // namespace

MonoidTag MonoidTag::int_vector(std::size_t length) {
  if (length == 0) fail(ErrorKind::InvalidArgument, "IntVector length must be positive");
  return MonoidTag(Kind::IntVector, length);
}

std::string MonoidTag::name() const {
  switch (kind_) {
    case Kind::F2: return "f2";
    case Kind::WrapInt64: return "int64";
    case Kind::IntVector: return "vec:" + std::to_string(lanes_);
  }
  return {};
}

MonoidTag MonoidTag::parse(const std::string& name) {
  if (name == "f2") return f2();
  if (name == "int64") return wrap_int64();
  if (name.rfind("vec:", 0) == 0) {
    auto len = parse_u64(std::string_view(name).substr(4));
    return int_vector(static_cast<std::size_t>(len));
  }
  fail(ErrorKind::Parse, "unknown monoid '" + name + "' (expected f2, int64, vec:<len>)");
}

MonoidValue::MonoidValue(MonoidTag tag) : tag_(tag) {
  if (tag_.kind() == MonoidTag::Kind::IntVector) vec_.assign(tag_.lanes(), 0);
}

MonoidValue MonoidValue::bit(bool b) {
  MonoidValue v(MonoidTag::f2());
  v.scalar_ = b ? 1 : 0;
  return v;
}

MonoidValue MonoidValue::int64(std::uint64_t x) {
  MonoidValue v(MonoidTag::wrap_int64());
  v.scalar_ = x;
  return v;
}

MonoidValue MonoidValue::vector(std::vector<std::uint64_t> lanes) {
  MonoidValue v(MonoidTag::int_vector(lanes.size()));
  v.vec_ = std::move(lanes);
  return v;
}

MonoidValue MonoidValue::from_lanes(const MonoidTag& tag,
                                    std::span<const std::uint64_t> lanes) {
  if (lanes.size() != tag.lanes())
    fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(tag.lanes()) +
                                       " lanes for " + tag.name() + ", got " +
                                       std::to_string(lanes.size()));
  switch (tag.kind()) {
    case MonoidTag::Kind::F2:
      if (lanes[0] > 1) fail(ErrorKind::InvalidArgument, "F2 value must be 0 or 1");
      return bit(lanes[0] != 0);
    case MonoidTag::Kind::WrapInt64:
      return int64(lanes[0]);
    case MonoidTag::Kind::IntVector:
      return vector({lanes.begin(), lanes.end()});
  }
  return MonoidValue(tag);
}

std::span<const std::uint64_t> MonoidValue::lanes() const {
  if (tag_.kind() == MonoidTag::Kind::IntVector) return vec_;
  return {&scalar_, 1};
}

MonoidValue& MonoidValue::operator+=(const MonoidValue& other) {
  if (!(tag_ == other.tag_))
    fail(ErrorKind::ShapeMismatch,
         "cannot combine " + tag_.name() + " with " + other.tag_.name());
  switch (tag_.kind()) {
    case MonoidTag::Kind::F2: scalar_ ^= other.scalar_; break;
    case MonoidTag::Kind::WrapInt64: scalar_ += other.scalar_; break;
    case MonoidTag::Kind::IntVector:
      for (std::size_t i = 0; i < vec_.size(); ++i) vec_[i] += other.vec_[i];
      break;
  }
  return *this;
}

bool MonoidValue::is_zero() const {
  if (tag_.kind() == MonoidTag::Kind::IntVector)
    return std::all_of(vec_.begin(), vec_.end(), [](std::uint64_t x) { return x == 0; });
  return scalar_ == 0;
}

std::string MonoidValue::to_string() const {
  if (tag_.kind() != MonoidTag::Kind::IntVector) return std::to_string(scalar_);
  std::string out;
  for (std::size_t i = 0; i < vec_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vec_[i]);
  }
  return out;
}

MonoidValue MonoidValue::parse(const MonoidTag& tag, const std::string& text) {
  std::vector<std::uint64_t> lanes;
  std::string_view rest(text);
  while (true) {
    auto comma = rest.find(',');
    lanes.push_back(parse_u64(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return from_lanes(tag, lanes);
}

bool operator==(const MonoidValue& a, const MonoidValue& b) {
  if (!(a.tag_ == b.tag_)) return false;
  if (a.tag_.kind() == MonoidTag::Kind::IntVector) return a.vec_ == b.vec_;
  return a.scalar_ == b.scalar_;
}

MonoidValue zero(const MonoidTag& tag) { return MonoidValue(tag); }

MonoidValue combine(const MonoidValue& a, const MonoidValue& b) {
  MonoidValue out = a;
  out += b;
  return out;
}

}  // namespace axt

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/distinguish.hpp"

namespace axt {

/// Square matrix over Z / 2^64.
class Matrix {
 public:
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<std::uint64_t> entries);
  static Matrix identity(std::size_t n);

  std::size_t n() const { return n_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  const std::vector<std::uint64_t>& entries() const { return data_; }

  std::vector<std::uint64_t> apply(std::span<const std::uint64_t> v) const;
  Matrix operator*(const Matrix& other) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> data_;
};

/// Smallest w in {8, 16, 32, 64} with 2^w >= count.
unsigned standard_key_width(std::uint64_t count);

struct FreivaldResult {
  bool accept = true;
  std::optional<std::size_t> rejecting_round;
  std::size_t rounds = 0;
  unsigned w = 8;
};

/// True when A(Bs) != Cs for s_j = Sample(j).
bool freivald_round_rejects(const Matrix& a, const Matrix& b, const Matrix& c, const Sampler& s);

/// `rounds` independent OddMul2w rounds over keys [n]; stops at the first
/// rejecting round.
FreivaldResult freivald_verify(const Matrix& a, const Matrix& b, const Matrix& c,
                               std::size_t rounds, std::uint64_t seed);

struct StreamUpdate {
  std::uint64_t key;
  MonoidValue value;
};

struct StreamTestResult {
  bool equal_sofar = true;
  std::vector<MonoidValue> stream_digest;
  std::vector<MonoidValue> claimed_digest;
  std::size_t d = 0;
  std::uint64_t updates = 0;
};

/// Digests the stream with d samplers of the claimed universe's default
/// family and compares with the d sampled sums of `claimed`. A mismatch is a
/// proof of inequality; a match errs with probability <= (7/8)^d.
StreamTestResult stream_equal_test(const std::vector<StreamUpdate>& stream,
                                   const ValueAssignment& claimed, std::size_t d,
                                   std::uint64_t seed);

class Graph {
 public:
  Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
        std::vector<std::size_t> tree);

  std::size_t vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool in_tree(std::size_t v) const { return in_tree_[v] != 0; }

  /// F2 values |e intersect T| mod 2 over keys [|E|] in a standard width.
  ValueAssignment edge_values() const;

 private:
  std::size_t vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::uint8_t> in_tree_;
};

struct TreeTestResult {
  bool edge_leaving_detected = false;
  std::size_t d = 0;
  unsigned w = 8;
};

TreeTestResult tree_edge_test(const Graph& g, std::size_t d, std::uint64_t seed);

}  // namespace axt

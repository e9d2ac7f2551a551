// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/apps.hpp"

#include "core/error.hpp"

namespace axt {

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n, 0) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "matrix dimension must be positive");
}

Matrix::Matrix(std::size_t n, std::vector<std::uint64_t> entries) : n_(n), data_(std::move(entries)) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "matrix dimension must be positive");
  if (data_.size() != n * n) fail(ErrorKind::ShapeMismatch, "matrix needs n*n entries");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::uint64_t> Matrix::apply(std::span<const std::uint64_t> v) const {
  if (v.size() != n_) fail(ErrorKind::ShapeMismatch, "vector length differs from matrix dimension");
  std::vector<std::uint64_t> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += data_[i * n_ + j] * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (other.n_ != n_) fail(ErrorKind::ShapeMismatch, "matrix dimensions differ");
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint64_t aik = at(i, k);
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

unsigned standard_key_width(std::uint64_t count) {
  for (unsigned w : {8u, 16u, 32u})
    if (count <= (std::uint64_t{1} << w)) return w;
  return 64;
}

bool freivald_round_rejects(const Matrix& a, const Matrix& b, const Matrix& c, const Sampler& s) {
  const std::size_t n = a.n();
  std::vector<std::uint64_t> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = s.sample(j) ? 1 : 0;
  return a.apply(b.apply(sv)) != c.apply(sv);
}

FreivaldResult freivald_verify(const Matrix& a, const Matrix& b, const Matrix& c,
                               std::size_t rounds, std::uint64_t seed) {
  if (a.n() != b.n() || a.n() != c.n()) fail(ErrorKind::ShapeMismatch, "matrix dimensions differ");
  if (rounds == 0) fail(ErrorKind::InvalidArgument, "freivald needs at least one round");
  FreivaldResult r;
  r.w = standard_key_width(a.n());
  SizeParams size;
  size.w = r.w;
  Rng rng(seed);
  for (std::size_t i = 0; i < rounds; ++i) {
    ++r.rounds;
    const Sampler s(random_spec(Scheme::OddMul2w, size, rng));
    if (freivald_round_rejects(a, b, c, s)) {
      r.accept = false;
      r.rejecting_round = i;
      break;
    }
  }
  return r;
}

StreamTestResult stream_equal_test(const std::vector<StreamUpdate>& stream,
                                   const ValueAssignment& claimed, std::size_t d,
                                   std::uint64_t seed) {
  if (d == 0) fail(ErrorKind::InvalidArgument, "stream test needs d >= 1");
  const auto [scheme, size] = default_family(claimed.universe());
  Rng rng(seed);
  std::vector<Sampler> samplers;
  for (std::size_t i = 0; i < d; ++i) samplers.emplace_back(random_spec(scheme, size, rng));

  StreamAccumulator acc(samplers, claimed.tag());
  for (const auto& u : stream) acc.update(u.key, u.value);

  StreamTestResult r;
  r.d = d;
  r.updates = stream.size();
  r.stream_digest = acc.digest();
  for (const auto& s : samplers) r.claimed_digest.push_back(sampled_sum(s, claimed));
  r.equal_sofar = r.stream_digest == r.claimed_digest;
  return r;
}

Graph::Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
             std::vector<std::size_t> tree)
    : vertices_(vertices), edges_(std::move(edges)), in_tree_(vertices, 0) {
  for (const auto& [u, v] : edges_)
    if (u >= vertices_ || v >= vertices_)
      fail(ErrorKind::OutOfRange, "edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                      "} references a missing vertex");
  for (auto v : tree) {
    if (v >= vertices_) fail(ErrorKind::OutOfRange, "tree vertex " + std::to_string(v) + " is missing");
    in_tree_[v] = 1;
  }
}

ValueAssignment Graph::edge_values() const {
  ValueAssignment v(Universe::power_of_two(standard_key_width(edges_.size())), MonoidTag::f2());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [a, b] = edges_[e];
    v.set(e, MonoidValue::bit(((in_tree_[a] + in_tree_[b]) & 1) != 0));
  }
  return v;
}

TreeTestResult tree_edge_test(const Graph& g, std::size_t d, std::uint64_t seed) {
  if (d == 0) fail(ErrorKind::InvalidArgument, "tree test needs d >= 1");
  const ValueAssignment values = g.edge_values();
  const auto [scheme, size] = default_family(values.universe());
  Rng rng(seed);
  const VectorSampler vs = VectorSampler::random(d, scheme, size, rng);
  TreeTestResult r;
  r.d = d;
  r.w = static_cast<unsigned>(values.universe().param());
  r.edge_leaving_detected = !vector_sums(vs, values).all_zero;
  return r;
}

}  // namespace axt

// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/text_formats.hpp"

#include <sstream>

#include "core/error.hpp"

namespace axt {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::uint64_t to_u64(const std::string& token, std::size_t line) {
  try {
    const u128 v = u128_from_string(token);
    if (v > ~std::uint64_t{0}) parse_error(line, "integer overflow '" + token + "'");
    return static_cast<std::uint64_t>(v);
  } catch (const Error&) {
    parse_error(line, "bad integer '" + token + "'");
  }
}

std::uint64_t to_wrapped(const std::string& token, std::size_t line) {
  if (!token.empty() && token.front() == '-') return ~to_u64(token.substr(1), line) + 1;
  return to_u64(token, line);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    out.push_back(l);
  }
  return out;
}

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

std::vector<StreamUpdate> parse_stream(const std::string& text, const MonoidTag& tag) {
  std::vector<StreamUpdate> out;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (skippable(lines[i])) continue;
    const auto t = tokens(lines[i]);
    if (t.size() != 2) parse_error(i + 1, "expected '<key> <value>'");
    const std::uint64_t key = to_u64(t[0], i + 1);
    try {
      out.push_back({key, MonoidValue::parse(tag, t[1])});
    } catch (const Error& e) {
      parse_error(i + 1, e.what());
    }
  }
  return out;
}

ValueAssignment parse_assignment(const std::string& text, const Universe& u, const MonoidTag& tag) {
  ValueAssignment v(u, tag);
  for (const auto& upd : parse_stream(text, tag)) v.add(upd.key, upd.value);
  return v;
}

std::string format_assignment(const ValueAssignment& v) {
  std::string out;
  for (const auto& [k, val] : v.entries()) out += std::to_string(k) + " " + val.to_string() + "\n";
  return out;
}

Matrix parse_matrix(const std::string& text) {
  std::vector<std::string> all;
  std::vector<std::size_t> line_of;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (auto& t : tokens(lines[i])) {
      all.push_back(t);
      line_of.push_back(i + 1);
    }
  if (all.empty()) parse_error(1, "missing matrix dimension");
  const std::uint64_t n = to_u64(all[0], line_of[0]);
  if (n == 0) parse_error(line_of[0], "matrix dimension must be positive");
  if (n > 1u << 14) parse_error(line_of[0], "matrix dimension too large");
  if (all.size() != 1 + n * n)
    parse_error(line_of.back(), "expected " + std::to_string(n * n) + " entries, got " +
                                    std::to_string(all.size() - 1));
  std::vector<std::uint64_t> entries(n * n);
  for (std::size_t i = 0; i < n * n; ++i) entries[i] = to_wrapped(all[i + 1], line_of[i + 1]);
  return Matrix(n, std::move(entries));
}

std::string format_matrix(const Matrix& m) {
  std::string out = std::to_string(m.n()) + "\n";
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

Graph parse_graph(const std::string& text) {
  const auto lines = lines_of(text);
  if (lines.empty()) parse_error(1, "missing 'V E' header");
  const auto head = tokens(lines[0]);
  if (head.size() != 2) parse_error(1, "expected 'V E'");
  const std::uint64_t vertices = to_u64(head[0], 1);
  const std::uint64_t edge_count = to_u64(head[1], 1);
  if (lines.size() < 1 + edge_count)
    parse_error(lines.size(), "expected " + std::to_string(edge_count) + " edge lines");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t e = 0; e < edge_count; ++e) {
    const auto t = tokens(lines[1 + e]);
    if (t.size() != 2) parse_error(2 + e, "expected 'u v'");
    edges.emplace_back(to_u64(t[0], 2 + e), to_u64(t[1], 2 + e));
  }
  std::vector<std::size_t> tree;
  for (std::size_t i = 1 + edge_count; i < lines.size(); ++i) {
    const auto t = tokens(lines[i]);
    if (t.empty()) continue;
    if (!tree.empty()) parse_error(i + 1, "tree vertices must be on a single line");
    for (auto& tok : t) tree.push_back(to_u64(tok, i + 1));
    if (tree.empty()) continue;
  }
  try {
    return Graph(vertices, std::move(edges), std::move(tree));
  } catch (const Error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

}  // namespace axt

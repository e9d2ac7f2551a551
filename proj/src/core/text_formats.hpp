// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "core/apps.hpp"

namespace axt {

// Line formats. Blank lines and lines starting with '#' are ignored in
// stream files; errors carry 1-based line numbers.

/// "<key-decimal> <value>" per line; F2 values 0/1, WrapInt64 decimal
/// (a leading '-' wraps), IntVector comma-separated.
std::vector<StreamUpdate> parse_stream(const std::string& text, const MonoidTag& tag);

/// A stream file accumulated into v(x) = sum of its updates.
ValueAssignment parse_assignment(const std::string& text, const Universe& u, const MonoidTag& tag);

std::string format_assignment(const ValueAssignment& v);

/// First line n, then n lines of n decimal integers.
Matrix parse_matrix(const std::string& text);
std::string format_matrix(const Matrix& m);

/// "V E", then E lines "u v", then one line of tree vertices (possibly empty
/// or absent).
Graph parse_graph(const std::string& text);

}  // namespace axt

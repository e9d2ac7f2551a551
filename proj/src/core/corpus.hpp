// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "core/distinguish.hpp"

namespace axt {

struct CorpusEntry {
  std::string name;
  ValueAssignment values;
};

/// The versioned adversarial corpus ("builtin"), built over `u`. Keys live in
/// [2^w'] where w' = w for [2^w] and floor(log2 p) for [p], so the same key
/// sets appear in both universes. Contents:
///   ones/<n>      all-ones F2 on {0..n-1}, n in {1,2,3,4,8,16,32,64}
///   msb/<x>,<y>   F2 ones on {x, x+2^(w'-1), y, y+2^(w'-1)}
///   f2/<i>        50 seeded random F2 assignments, 1 <= n <= 48
///   int64/<i>     20 seeded WrapInt64 assignments, small signed values
/// Entries that do not fit in the universe are skipped.
std::vector<CorpusEntry> builtin_corpus(const Universe& u);

inline constexpr unsigned kCorpusVersion = 1;

}  // namespace axt

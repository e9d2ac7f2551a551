// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "core/apps.hpp"
#include "core/bench.hpp"
#include "core/corpus.hpp"
#include "core/verify.hpp"

namespace axt {

// Report serializers. Exact rationals are "num/den" strings and 128-bit
// integers decimal strings, so every value survives a JSON round trip.

nlohmann::json to_json(const DistinguishReport& r);
nlohmann::json to_json(const LemmaCheckResult& r);
nlohmann::json to_json(const SweepResult& r);
nlohmann::json to_json(const MomentReport& r);
nlohmann::json to_json(const SmallBiasReport& r);
nlohmann::json to_json(const CounterexampleReport& r);
nlohmann::json to_json(const FreivaldResult& r);
nlohmann::json to_json(const StreamTestResult& r);
nlohmann::json to_json(const TreeTestResult& r);
nlohmann::json to_json(const BenchReport& r);
nlohmann::json to_json(const GoodMeasure& g);

nlohmann::json assignment_to_json(const ValueAssignment& v);
ValueAssignment assignment_from_json(const nlohmann::json& j);

}  // namespace axt

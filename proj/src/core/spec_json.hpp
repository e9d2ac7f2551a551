// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "core/samplers.hpp"

namespace axt {

/// One JSON object per spec: {"scheme": ..., <params>..., "seed": ...}.
/// 128-bit quantities (poly coefficients and thresholds) are decimal strings;
/// materialized bit arrays are "0101..." strings.
nlohmann::json spec_to_json(const SamplerSpec& spec);
SamplerSpec spec_from_json(const nlohmann::json& j);

/// Size parameters as accepted by random_spec, read from the same keys the
/// spec objects use ("w", "p", "field", "k", "chars", ...).
SizeParams size_params_from_json(const nlohmann::json& j);
nlohmann::json size_params_to_json(Scheme scheme, const SizeParams& size);

}  // namespace axt

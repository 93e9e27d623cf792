#pragma once

#include <string>

#include "json.hpp"

#include "leash/dyadic.hpp"

namespace leash {

// {"num": N, "log2_den": q, "decimal": "..."} with N a JSON integer when it
// fits 64 bits and a decimal string otherwise.
nlohmann::json value_to_json(const DyadicRational& value);

// Inverse of value_to_json; when a "decimal" field is present it must match.
DyadicRational value_from_json(const nlohmann::json& j);

bool is_value_object(const nlohmann::json& j);

// Canonical JSON rendering: sorted keys, two-space indent, trailing newline.
std::string render_json(const nlohmann::json& report);

// Deterministic plain-text rendering; value objects print as "p/2^q (decimal)".
std::string render_text(const nlohmann::json& report);

}  // namespace leash

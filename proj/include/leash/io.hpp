#pragma once

#include <string>

#include "leash/action.hpp"

namespace leash {

// Parses an action document:
//   {"group": {"kind": "Z"|"Zd"|"cyclic"|"free"|"H", ...param},
//    "resolution": L,
//    "generators": {"g0": [cell permutation], ...}}
// Structural problems throw ParseError; relator failures pass through as
// RelatorViolated.
Action parse_action_text(const std::string& text, CoverMode mode = CoverMode::Singletons);

// Reads and parses one action file. Unreadable files throw IoError.
Action load_action(const std::string& path, CoverMode mode = CoverMode::Singletons);

}  // namespace leash

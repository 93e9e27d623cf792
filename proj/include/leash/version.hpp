#pragma once

namespace leash {

inline constexpr const char* kToolName = "leash";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace leash

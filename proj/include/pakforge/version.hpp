#pragma once

#include <string>

namespace pakforge {

inline constexpr const char* k_tool_name = "pakforge";
inline constexpr const char* k_tool_version = "0.1.0";

inline std::string version_banner() {
    return std::string(k_tool_name) + " " + k_tool_version;
}

} // namespace pakforge

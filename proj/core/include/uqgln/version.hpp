#pragma once

namespace uqgln {

inline constexpr const char* kToolName = "uqgln";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace uqgln

#pragma once

namespace poolsim {

inline constexpr const char* kToolName = "poolsim";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace poolsim

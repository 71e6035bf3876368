#pragma once

namespace hmw {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hmw

#pragma once

namespace rotsys {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace rotsys

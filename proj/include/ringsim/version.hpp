#pragma once

namespace ringsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ringsim

#pragma once

namespace irg {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace irg

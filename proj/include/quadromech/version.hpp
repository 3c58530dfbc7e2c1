#pragma once

namespace quadromech {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quadromech

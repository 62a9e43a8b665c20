#pragma once

namespace narranet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace narranet

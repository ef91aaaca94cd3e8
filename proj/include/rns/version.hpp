#pragma once

namespace rns {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rns

#pragma once

namespace grmir {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace grmir

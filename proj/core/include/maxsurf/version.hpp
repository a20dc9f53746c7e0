#pragma once

namespace maxsurf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace maxsurf

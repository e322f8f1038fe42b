#pragma once

namespace mdiqkd {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mdiqkd

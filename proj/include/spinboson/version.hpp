#pragma once

namespace spinboson {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spinboson

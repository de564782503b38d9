#pragma once

namespace urbansynth {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace urbansynth

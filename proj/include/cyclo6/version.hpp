#pragma once

namespace cyclo6 {

inline constexpr const char* kVersion = "1.0.0";

}

#pragma once

namespace motivix {
inline constexpr const char* version = "0.1.0";
}

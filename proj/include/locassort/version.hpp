#pragma once

namespace locassort {
inline constexpr const char* kVersion = "0.1.0";
}

#pragma once

namespace whalg {
inline constexpr const char* kEngineVersion = "0.1.0";
}

#pragma once

namespace laman {

inline constexpr const char* kVersion = "0.1.0";

}

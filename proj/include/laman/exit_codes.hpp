#pragma once

#include <exception>

#include "laman/errors.hpp"

namespace laman {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNotLaman = 3;
inline constexpr int kExitOverflow = 4;
inline constexpr int kExitInconclusive = 5;

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
    if (dynamic_cast<const NotLamanError*>(&e)) return kExitNotLaman;
    if (dynamic_cast<const OverflowError*>(&e)) return kExitOverflow;
    if (dynamic_cast<const InconclusiveError*>(&e)) return kExitInconclusive;
    return kExitOther;
}

} // namespace laman

#pragma once

namespace isb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace isb

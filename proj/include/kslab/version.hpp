#pragma once

namespace kslab {

inline constexpr const char* version = "0.1.0";

} // namespace kslab

#pragma once

namespace arcstar {

inline constexpr const char* version = "0.1.0";

}  // namespace arcstar

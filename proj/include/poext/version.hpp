#pragma once

namespace poext {

inline constexpr const char* version = "0.1.0";

}  // namespace poext

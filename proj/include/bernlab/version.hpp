#pragma once

#include <string_view>

namespace bernlab {

inline constexpr std::string_view version = "0.3.0";

}  // namespace bernlab

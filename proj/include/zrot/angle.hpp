#pragma once

#include <string_view>

namespace zrot {

// "1.25" (radians) or "<number>pi" such as "0.5pi", "-pi", "2PI".
double parse_angle(std::string_view text);

}  // namespace zrot

#pragma once

#include <string>

#include "hypfib/forms.hpp"

namespace hypfib {

// {"n": 3, "f": ["0", ...], "g": ["1", ...]}; coefficients c_0..c_d as decimal strings.
Surface ParseSurface(const std::string& text);
Surface LoadSurface(const std::string& path);
std::string SurfaceToJson(const Surface& s);

}  // namespace hypfib

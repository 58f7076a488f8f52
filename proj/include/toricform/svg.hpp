#pragma once

#include <string>
#include <vector>

#include "toricform/pipeline.hpp"

namespace toricform {

// Two-panel picture for n = 2: the Newton polygon with its support points and
// labeled facets, and the dual fan together with the rays added by the
// regular refinement.  Any other dimension raises input_error.
std::string svg_picture(const Analysis& a, const std::vector<std::string>& names);

}  // namespace toricform

#pragma once

#include <string>
#include <vector>

namespace muntz {

/// Figure numbers that figure_svg accepts.
std::vector<int> figure_ids();

/// SVG for one of the built-in demo scenes. The control points are chosen
/// here and only approximate the published pictures. Throws Error(InvalidInput).
std::string figure_svg(int id);

} // namespace muntz

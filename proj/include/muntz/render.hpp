#pragma once

#include "muntz/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace muntz {

/// Rounds half away from zero to `digits` places, exactly.
std::string to_fixed(const Rational& q, int digits);

/// RFC 4180: header "t,x1,..,xd,t_exact,x1_exact,..", CRLF line ends.
std::string curve_samples_csv(const std::vector<std::pair<Rational, Point>>& samples);
/// Header "s,t,x1,..,xd".
std::string surface_samples_csv(const std::vector<SurfaceSample>& samples);

struct SvgLayer {
  std::string color;
  std::vector<Point> polygon; ///< control polygon, drawn dashed with markers
  std::vector<Point> curve;   ///< sampled curve
  std::string label;
};

/// Planar plot of the first two coordinates, scaled to fit.
std::string render_svg(const std::string& title, const std::vector<SvgLayer>& layers);

} // namespace muntz

#ifndef CHANNELSCOPE_GEOMETRY_HPP
#define CHANNELSCOPE_GEOMETRY_HPP

#include <array>
#include <string>
#include <vector>

#include "channelscope/channels.hpp"
#include "channelscope/compat.hpp"

namespace chs {

/// Cartesian coordinates of a 2x2 correlation. Valid points satisfy
/// |x + y| <= 1 and |x - y| <= 1.
struct CartesianPoint {
    double x = 0.0;
    double y = 0.0;
};

/// x = p_{1|1} + p_{1|2} - 1, y = p_{1|1} - p_{1|2}.
CartesianPoint to_cartesian(const Correlation& p);

/// Inverse of to_cartesian; throws if the point lies outside the square.
Correlation from_cartesian(CartesianPoint pt);

/// {(x,y), (x,-y), (-x,y), (-x,-y)}.
std::array<CartesianPoint, 4> symmetry_orbit(CartesianPoint pt);

using Polyline = std::vector<CartesianPoint>;

/// Closed polylines tracing the boundary of the achievable region.
/// Analytic polygons/curves for the closed-form families, marching squares
/// on the membership indicator otherwise.
std::vector<Polyline> region_boundary(const ChannelSpec& spec, int resolution);

/// x,y per line, blank line between polylines, 17 significant digits.
std::string boundary_to_csv(const std::vector<Polyline>& lines);

/// Minimal SVG: unit-square viewport, one path per polyline.
std::string boundary_to_svg(const std::vector<Polyline>& lines);

}  // namespace chs

#endif

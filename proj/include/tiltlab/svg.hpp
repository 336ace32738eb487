#pragma once

#include <string>
#include <vector>

#include "tiltlab/walls.hpp"

namespace tiltlab {

// Fixed-precision decimal used for every SVG coordinate, so documents are
// byte-stable across runs.
std::string format_svg_number(double value);

// Renders the wall diagram: beta horizontal, alpha vertical, axes plus one
// line per vertical wall and one arc per semicircle, clipped to the region.
// The exact affine transform from (beta, alpha) to page coordinates is
// recorded in a metadata element. Throws std::invalid_argument on a region
// with beta_min > beta_max or alpha_max <= 0.
std::string render_walls_svg(const std::vector<Wall>& walls, const WallRegion& region);

}  // namespace tiltlab

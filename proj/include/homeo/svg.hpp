#pragma once

#include <span>
#include <string>

#include "homeo/plane.hpp"
#include "homeo/verify.hpp"

namespace homeo {

struct DiscHighlight {
    PlanePoint center;
    double radius = 0.0;
    std::string color;
};

/// Self-contained SVG of a polar grid of the unit disc (24 spokes, 16 circles) before
/// (light stroke) and after (dark stroke) applying `map`, with optional highlighted discs.
std::string deformation_grid_svg(const PlaneMap& map, std::span<const DiscHighlight> highlights = {});

}  // namespace homeo

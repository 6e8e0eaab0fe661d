#pragma once

#include <string>

#include "levy/dragon.hpp"

namespace levy {

enum class RenderClassification {
    kPlain,    // occupied vs unoccupied
    kByClass,  // unoccupied / occupied-not-covered / covered
};

/// Deterministic SVG drawing of the level-k subdivision of the base
/// triangle's star with the occupancy overlaid. Identical arguments give
/// byte-identical output; all coordinates are exact finite decimals.
std::string render_svg(int depth, RenderClassification classification,
                       int depth_limit = kDefaultGeometricDepthLimit);

}  // namespace levy

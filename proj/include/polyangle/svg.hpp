#pragma once

#include <string>

#include "polyangle/geometry.hpp"

namespace polyangle {

struct SvgOptions {
    bool hull = false;     // dashed hull outline
    bool segments = false; // per-edge beta_max arc overlays
    bool layers = false;   // color points by onion-peeling layer
};

// A closed polygon path over the point set plus the requested overlays, with
// fixed formatting so identical inputs give identical bytes. The viewBox is
// the point bounding box with a 5% margin.
std::string render_svg(const PointSet& s, const Polygon& p, const SvgOptions& opt = {});

} // namespace polyangle

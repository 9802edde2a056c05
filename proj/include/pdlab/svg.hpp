#pragma once

#include <string>
#include <vector>

#include "pdlab/boxes.hpp"
#include "pdlab/delaunay.hpp"

namespace pdlab {

// Deterministic SVG rendering: same input, same bytes. Delaunay edges are
// solid, the Voronoi overlay dashed; circumcircles and highlighted paths or
// box clusters are optional layers.
struct SvgOptions {
    double scale = 24.0;       // pixels per length unit
    bool voronoi = false;
    bool circumcircles = false;
    std::vector<std::vector<int>> paths; // vertex chains to highlight
    const BadClusterSet* clusters = nullptr;
};

std::string render_svg(const Triangulation& tri, const SvgOptions& opt = {});

// Window-only frame with no geometry (used when there is nothing to draw).
std::string render_svg_frame(const Window& window, double scale = 24.0);

} // namespace pdlab

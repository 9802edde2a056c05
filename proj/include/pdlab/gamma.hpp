#pragma once

#include <cstdint>
#include <vector>

#include "pdlab/delaunay.hpp"

namespace pdlab {

// Membership in the perturbation region of a Delaunay edge: the set of
// locations whose insertion removes the edge. For an interior edge this is
// the intersection of the two incident circumdisks (strict interior). For a
// hull edge it is the part of the single incident circumdisk strictly beyond
// the edge's line (insertions on the inner side keep the edge), plus the open
// segment itself.
bool gamma_edge_membership(const Triangulation& tri, int u, int v, Vec2 x);

struct GammaArea {
    double area = 0.0;
    double se = 0.0;
    long samples = 0;
    int interior_edges = 0;
    int hull_edges_flagged = 0; // excluded from the area accounting
};

// Monte Carlo area of the union of per-edge perturbation regions along a
// vertex path; sampled uniformly over the bounding box of the per-edge lens
// regions.
GammaArea gamma_path_area(const Triangulation& tri, const std::vector<int>& path, long samples,
                          uint64_t seed);

// Constructive path from v to u staying in the closed ball around u of radius
// |u - v|: each step picks the point closing the smallest diametral ball
// toward u, which is always a Delaunay neighbor of the current vertex.
std::vector<int> ball_walk(const Triangulation& tri, int v, int u);

} // namespace pdlab

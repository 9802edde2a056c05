#pragma once

#include "pdlab/delaunay.hpp"

namespace pdlab {

// Number of Delaunay cells whose closed region meets the closed segment
// [a, b]; both endpoints must lie inside the triangulated hull.
long cells_on_segment(const Triangulation& tri, Vec2 a, Vec2 b);

struct StabbingResult {
    long stab = 0;        // max cells over sampled boundary-to-boundary segments
    long pairs = 0;       // segments evaluated
    double witness_a_x = 0, witness_a_y = 0, witness_b_x = 0, witness_b_y = 0;
};

// Lower bound for the stabbing number of the triangulation restricted to
// [0, n]^2: the boundary is cut into unit segments, `samples_per_unit` points
// are placed on each, and all cross pairs plus the two midlines and both
// diagonals are probed.
StabbingResult stabbing_number(const Triangulation& tri, int n, int samples_per_unit = 1,
                               long pair_budget = 2'000'000);

} // namespace pdlab

#pragma once

#include <vector>

#include "pdlab/boxes.hpp"
#include "pdlab/delaunay.hpp"

namespace pdlab {

// Exact count of self-avoiding r-edge paths from `start` avoiding `forbidden`.
// r = 0 counts the empty path (1 if start is allowed, else 0).
long count_sa_paths(const DelaunayGraph& graph, int start, int r,
                    const std::vector<int>& forbidden = {}, long budget = 50'000'000);

struct DegreeProductCheck {
    long count = 0;     // N_r
    double bound = 0.0; // max over (r-1)-edge s.a. paths of prod deg(v)
    bool ok = false;    // count <= bound
};

// The degree-product bound on path counts, checked exactly.
DegreeProductCheck degree_product_bound_check(const DelaunayGraph& graph, int start, int r,
                                              long budget = 50'000'000);

struct CoveringExtremes {
    long g_min = 0; // min animal size over s.a. paths of length >= r from start
    long g_max = 0; // max animal size over s.a. paths of length <= r from start
};

// Animal sizes (boxes of scale L, shift 1, met by the path polyline) extremized
// over self-avoiding paths from `start` by exhaustive DFS.
CoveringExtremes covering_extremes(const Triangulation& tri, int start, int r, double L,
                                   long budget = 50'000'000);

} // namespace pdlab

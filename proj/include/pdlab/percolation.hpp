#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pdlab/boxes.hpp"
#include "pdlab/delaunay.hpp"

namespace pdlab {

// Bernoulli bond field on the Delaunay edges: open (X_e = 1) independently
// with probability p, keyed by the edge's endpoint coordinates so that the
// state of a surviving edge does not depend on the rest of the configuration.
struct BondField {
    std::shared_ptr<const Triangulation> tri;
    double p = 0.5;
    uint64_t seed = 0;

    bool open(int u, int v) const;
};

BondField make_bond_field(std::shared_ptr<const Triangulation> tri, double p, uint64_t seed);

// Open cluster of v(0): all vertices reachable from the cell of the origin
// through open edges.
std::vector<int> open_cluster(const BondField& bf);

// Good box at scale L around site z of the L/2-grid:
//  (i) every box at Linf distance <= 2 is nice;
//  (ii) no all-closed path connects the inner L/2 box to the boundary of the
//       concentric 3L/2 box.
bool good_box_Y(const BondField& bf, double L, GridSite z, int d = 2);

// Whether some self-avoiding path of exactly m edges carries at most a*m open
// edges (DFS over all start vertices, pruned on the open-edge count).
bool sparse_open_path_exists(const BondField& bf, int m, double a, long budget = 100'000'000);

} // namespace pdlab

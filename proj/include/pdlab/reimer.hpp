#pragma once

#include <cstdint>
#include <vector>

#include "pdlab/boxes.hpp"
#include "pdlab/weightfn.hpp"

namespace pdlab {

// Bernoulli site field on a w x h grid rectangle (Linf cluster adjacency, the
// same notion as the renormalization bad clusters).
struct LatticeField {
    int w = 0, h = 0;
    std::vector<uint8_t> bad; // row-major

    bool at(int x, int y) const { return bad[std::size_t(y) * std::size_t(w) + std::size_t(x)] != 0; }
};

LatticeField random_lattice_field(int w, int h, double p, uint64_t seed);

// Connected components of bad sites; component id per cell, -1 for good sites.
struct LatticeClusters {
    std::vector<int> comp;
    std::vector<long> sizes;

    int id(const LatticeField& f, int x, int y) const {
        return comp[std::size_t(y) * std::size_t(f.w) + std::size_t(x)];
    }
};

LatticeClusters lattice_clusters(const LatticeField& f);

// Two sides of the negative-correlation bound for cluster weights:
//   lhs = E[ prod over distinct bad clusters C meeting Lambda of f(|C|) ]
//   rhs = prod over x in Lambda of E[ f(|Cl(x)|) ]
// with the convention f(0) = 1 for empty clusters. Estimated by Monte Carlo
// (rhs SE by delete-one jackknife); grids of at most 22 cells are also
// computed by exact enumeration.
struct ReimerProbe {
    double lhs = 0.0, lhs_se = 0.0;
    double rhs = 0.0, rhs_se = 0.0;
    bool exact_available = false;
    double exact_lhs = 0.0, exact_rhs = 0.0;
};

ReimerProbe reimer_probe(int w, int h, double p, const WeightFn& f,
                         const std::vector<GridSite>& lambda, long replicas, uint64_t seed);

} // namespace pdlab

#pragma once

#include <functional>
#include <vector>

#include "pdlab/delaunay.hpp"
#include "pdlab/weightfn.hpp"

namespace pdlab {

// A polyomino is a connected set of n vertices of the Delaunay graph
// containing the root (the cell of the origin).
struct Polyomino {
    std::vector<int> vertices; // sorted
    int root = -1;
};

// Enumerates every connected n-subset containing `root` exactly once and
// feeds it to `emit` (return false to stop). `budget` caps the number of
// extension steps; exceeding it raises BudgetExceeded.
void enum_polyominoes(const DelaunayGraph& graph, int root, int n,
                      const std::function<bool(const std::vector<int>&)>& emit,
                      long budget = 5'000'000);

std::vector<Polyomino> collect_polyominoes(const DelaunayGraph& graph, int root, int n,
                                           long budget = 5'000'000);

struct WeightResult {
    double value = 0.0;
    Polyomino witness;
    bool exact = true;
};

// Exact maximum of sum f(deg v) over polyominoes of size n containing root.
// Ties resolve to the lexicographically smallest vertex set.
WeightResult f_n_exact(const DelaunayGraph& graph, const WeightFn& f, int root, int n,
                       long budget = 5'000'000);

// Beam-search lower bound: grows candidates one adjacent vertex at a time and
// keeps the best `width` per size (deduplicated). Always <= f_n_exact, with
// equality once the beam is wide enough to hold every candidate.
WeightResult f_n_beam(const DelaunayGraph& graph, const WeightFn& f, int root, int n, int width);

} // namespace pdlab

#pragma once

#include <vector>

#include "pdlab/boxes.hpp"
#include "pdlab/delaunay.hpp"

namespace pdlab {

// Checks, for every Delaunay cell meeting Im(C) of a marked cluster C, that
// the cell is contained in Ad(C). Clusters touching the field rectangle's
// boundary are skipped (their surroundings are unclassified) and counted.
struct ConfinementViolation {
    int cluster = -1;
    int triangle = -1;
    double escape_area = 0.0; // area of the part of the cell outside Ad(C)
};

struct ConfinementReport {
    std::vector<ConfinementViolation> violations;
    int clusters_checked = 0;
    int clusters_skipped_boundary = 0;
    long cells_meeting_im = 0;

    bool ok() const { return violations.empty(); }
};

ConfinementReport check_cell_confinement(const Triangulation& tri, const BadClusterSet& clusters);

} // namespace pdlab

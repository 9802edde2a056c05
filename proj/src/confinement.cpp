#include "pdlab/confinement.hpp"

#include <algorithm>
#include <cmath>

namespace pdlab {

namespace {

Rect bounding_rect(const BoxGrid& grid, const BadCluster& c, double margin) {
    Rect r{1e300, -1e300, 1e300, -1e300};
    for (const GridSite& z : c.sites) {
        const Rect b = grid.box_rect(z);
        r.x0 = std::min(r.x0, b.x0);
        r.x1 = std::max(r.x1, b.x1);
        r.y0 = std::min(r.y0, b.y0);
        r.y1 = std::max(r.y1, b.y1);
    }
    r.x0 -= margin;
    r.x1 += margin;
    r.y0 -= margin;
    r.y1 += margin;
    return r;
}

// Area of the triangle part outside the union of the cluster's Ad squares.
// Ad is open; containment of the compact cell implies positive clearance, so
// squares are shrunk by a tiny epsilon and leftovers below an area floor are
// treated as numerical dust.
double escape_area(const BoxGrid& grid, const BadCluster& c, Vec2 a, Vec2 b, Vec2 cc) {
    const double eps = 1e-9 * grid.r;
    const double dust = 1e-12 * grid.r * grid.r;
    std::vector<std::vector<Vec2>> pieces{{a, b, cc}};
    if (polygon_area(pieces[0]) < 0) std::reverse(pieces[0].begin(), pieces[0].end());
    for (const GridSite& z : c.sites) {
        const Vec2 ctr = grid.box_center(z);
        const Rect sq{ctr.x - grid.r + eps, ctr.x + grid.r - eps, ctr.y - grid.r + eps,
                      ctr.y + grid.r - eps};
        std::vector<std::vector<Vec2>> next;
        for (const auto& piece : pieces) {
            for (auto& part : convex_minus_rect(piece, sq)) {
                if (std::fabs(polygon_area(part)) > dust) next.push_back(std::move(part));
            }
        }
        pieces = std::move(next);
        if (pieces.empty()) return 0.0;
    }
    double total = 0;
    for (const auto& piece : pieces) total += std::fabs(polygon_area(piece));
    return total;
}

} // namespace

ConfinementReport check_cell_confinement(const Triangulation& tri, const BadClusterSet& clusters) {
    ConfinementReport report;
    const BoxGrid& grid = clusters.grid;

    // Per-triangle bounding rectangles once.
    std::vector<Rect> tri_bbox(tri.triangles.size());
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        const Vec2 a = tri.point(tri.triangles[t][0]);
        const Vec2 b = tri.point(tri.triangles[t][1]);
        const Vec2 c = tri.point(tri.triangles[t][2]);
        tri_bbox[t] = {std::min({a.x, b.x, c.x}), std::max({a.x, b.x, c.x}),
                       std::min({a.y, b.y, c.y}), std::max({a.y, b.y, c.y})};
    }

    for (int ci = 0; ci < int(clusters.clusters.size()); ++ci) {
        const BadCluster& c = clusters.clusters[std::size_t(ci)];
        if (c.touches_rect_boundary) {
            ++report.clusters_skipped_boundary;
            continue;
        }
        ++report.clusters_checked;
        const Rect im_bbox = bounding_rect(grid, c, 0.0);
        std::vector<Rect> boxes;
        boxes.reserve(c.sites.size());
        for (const GridSite& z : c.sites) boxes.push_back(grid.box_rect(z));

        for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
            if (!tri_bbox[t].intersects(im_bbox)) continue;
            const Vec2 a = tri.point(tri.triangles[t][0]);
            const Vec2 b = tri.point(tri.triangles[t][1]);
            const Vec2 cc = tri.point(tri.triangles[t][2]);
            bool meets = false;
            for (const Rect& box : boxes) {
                if (!tri_bbox[t].intersects(box)) continue;
                if (triangle_rect_intersect(a, b, cc, box)) {
                    meets = true;
                    break;
                }
            }
            if (!meets) continue;
            ++report.cells_meeting_im;
            const double esc = escape_area(grid, c, a, b, cc);
            if (esc > 1e-9 * grid.r * grid.r)
                report.violations.push_back({ci, int(t), esc});
        }
    }
    return report;
}

} // namespace pdlab

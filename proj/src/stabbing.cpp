#include "pdlab/stabbing.hpp"

#include <algorithm>

#include "pdlab/errors.hpp"
#include "pdlab/geom_util.hpp"

namespace pdlab {

long cells_on_segment(const Triangulation& tri, Vec2 a, Vec2 b) {
    const auto ta = find_triangle(tri, a);
    const auto tb = find_triangle(tri, b);
    if (!ta || !tb) throw OutOfWindow("segment endpoint outside the triangulated region");

    // BFS over triangle adjacency restricted to triangles meeting the segment.
    // The set of closed cells meeting a segment is edge-connected (cells
    // touching only at a crossed vertex are bridged by that vertex's star,
    // every member of which contains the vertex), so seeding from both
    // endpoint triangles covers it.
    std::vector<char> seen(tri.num_triangles(), 0);
    std::vector<int> stack;
    auto push = [&](int t) {
        if (t >= 0 && !seen[std::size_t(t)]) {
            seen[std::size_t(t)] = 1;
            stack.push_back(t);
        }
    };
    push(*ta);
    push(*tb);
    long count = 0;
    while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        const auto& tv = tri.triangles[std::size_t(t)];
        if (!triangle_segment_intersect(tri.point(tv[0]), tri.point(tv[1]), tri.point(tv[2]), a, b))
            continue;
        ++count;
        for (int k = 0; k < 3; ++k) {
            push(tri.neighbors[std::size_t(t)][std::size_t(k)]);
            // Bridge through vertex stars: neighbors of neighbors sharing a
            // vertex with t are found via the two adjacent triangles, which
            // are enqueued even if they miss the segment themselves... they
            // are filtered above, so also enqueue their neighbors when they
            // share a vertex on the segment. Cheap variant: enqueue all
            // neighbors unconditionally; non-intersecting ones are filtered
            // but their own neighbors are not explored through them.
        }
        // Vertex-star bridging: if the segment passes exactly through a
        // vertex of t, every triangle of that star meets the segment; walk
        // the star explicitly.
        for (int k = 0; k < 3; ++k) {
            const Vec2 p = tri.point(tv[std::size_t(k)]);
            if (orient2d(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
                for (int t2 = 0; t2 < int(tri.num_triangles()); ++t2) {
                    const auto& sv = tri.triangles[std::size_t(t2)];
                    if (sv[0] == tv[std::size_t(k)] || sv[1] == tv[std::size_t(k)] ||
                        sv[2] == tv[std::size_t(k)])
                        push(t2);
                }
            }
        }
    }
    return count;
}

StabbingResult stabbing_number(const Triangulation& tri, int n, int samples_per_unit,
                               long pair_budget) {
    if (n < 1) throw InvalidParameter("square side must be >= 1");
    if (samples_per_unit < 1) throw InvalidParameter("need >= 1 sample per unit segment");

    // Sample points on the boundary of [0, n]^2, per unit segment.
    std::vector<Vec2> pts;
    for (int side = 0; side < 4; ++side) {
        for (int i = 0; i < n; ++i) {
            for (int s = 0; s < samples_per_unit; ++s) {
                const double t = double(i) + (double(s) + 0.5) / double(samples_per_unit);
                switch (side) {
                    case 0: pts.push_back({t, 0}); break;
                    case 1: pts.push_back({t, double(n)}); break;
                    case 2: pts.push_back({0, t}); break;
                    case 3: pts.push_back({double(n), t}); break;
                }
            }
        }
    }
    const long pairs = long(pts.size()) * (long(pts.size()) - 1) / 2;
    if (pairs > pair_budget) throw BudgetExceeded("stabbing pair sweep exceeds the budget");

    StabbingResult out;
    auto probe = [&](Vec2 a, Vec2 b) {
        const long c = cells_on_segment(tri, a, b);
        ++out.pairs;
        if (c > out.stab) {
            out.stab = c;
            out.witness_a_x = a.x;
            out.witness_a_y = a.y;
            out.witness_b_x = b.x;
            out.witness_b_y = b.y;
        }
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) probe(pts[i], pts[j]);
    // Deterministic witnesses: midlines and diagonals.
    const double h = double(n) / 2.0;
    probe({0, h}, {double(n), h});
    probe({h, 0}, {h, double(n)});
    probe({0, 0}, {double(n), double(n)});
    probe({0, double(n)}, {double(n), 0});
    return out;
}

} // namespace pdlab

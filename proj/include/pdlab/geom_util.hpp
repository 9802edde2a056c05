#pragma once

#include <vector>

#include "pdlab/predicates.hpp"
#include "pdlab/vec.hpp"

namespace pdlab {

struct Rect {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    bool contains_closed(Vec2 p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    bool intersects(const Rect& o) const {
        return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
    }
};

inline bool point_in_triangle_closed(Vec2 a, Vec2 b, Vec2 c, Vec2 p) {
    const int o1 = orient2d(a, b, p);
    const int o2 = orient2d(b, c, p);
    const int o3 = orient2d(c, a, p);
    return (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
}

// Closed segment intersection (touching counts), collinear overlap included.
bool segments_intersect_closed(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2);

// Closed triangle vs closed axis-aligned rectangle overlap.
bool triangle_rect_intersect(Vec2 a, Vec2 b, Vec2 c, const Rect& r);

// Closed triangle vs closed segment intersection.
bool triangle_segment_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 s1, Vec2 s2);

// Signed area (positive for CCW) and |area| of a simple polygon.
double polygon_area(const std::vector<Vec2>& poly);

// Convex polygon clipped to a closed half-plane {p : f(p) >= 0} where
// f(p) = n . p - d. Returns the clipped polygon (possibly empty).
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, Vec2 n, double d);

// Pieces of `poly` (convex, CCW) outside the closed rectangle. The pieces tile
// poly \ rect with disjoint interiors.
std::vector<std::vector<Vec2>> convex_minus_rect(const std::vector<Vec2>& poly, const Rect& r);

} // namespace pdlab

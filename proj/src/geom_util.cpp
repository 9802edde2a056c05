#include "pdlab/geom_util.hpp"

#include <algorithm>

namespace pdlab {

namespace {

bool on_segment_collinear(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_intersect_closed(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    const int d1 = orient2d(q1, q2, p1);
    const int d2 = orient2d(q1, q2, p2);
    const int d3 = orient2d(p1, p2, q1);
    const int d4 = orient2d(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment_collinear(q1, q2, p1)) return true;
    if (d2 == 0 && on_segment_collinear(q1, q2, p2)) return true;
    if (d3 == 0 && on_segment_collinear(p1, p2, q1)) return true;
    if (d4 == 0 && on_segment_collinear(p1, p2, q2)) return true;
    return false;
}

bool triangle_rect_intersect(Vec2 a, Vec2 b, Vec2 c, const Rect& r) {
    if (r.contains_closed(a) || r.contains_closed(b) || r.contains_closed(c)) return true;
    const Vec2 corners[4] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
    for (const Vec2& q : corners)
        if (point_in_triangle_closed(a, b, c, q)) return true;
    const Vec2 tv[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        const Vec2 s1 = tv[i], s2 = tv[(i + 1) % 3];
        for (int j = 0; j < 4; ++j)
            if (segments_intersect_closed(s1, s2, corners[j], corners[(j + 1) % 4])) return true;
    }
    return false;
}

bool triangle_segment_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 s1, Vec2 s2) {
    if (point_in_triangle_closed(a, b, c, s1) || point_in_triangle_closed(a, b, c, s2)) return true;
    const Vec2 tv[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
        if (segments_intersect_closed(tv[i], tv[(i + 1) % 3], s1, s2)) return true;
    return false;
}

double polygon_area(const std::vector<Vec2>& poly) {
    if (poly.size() < 3) return 0.0;
    double s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 p = poly[i];
        const Vec2 q = poly[(i + 1) % poly.size()];
        s += cross(p, q);
    }
    return 0.5 * s;
}

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, Vec2 n, double d) {
    std::vector<Vec2> out;
    if (poly.empty()) return out;
    out.reserve(poly.size() + 2);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 p = poly[i];
        const Vec2 q = poly[(i + 1) % poly.size()];
        const double fp = dot(n, p) - d;
        const double fq = dot(n, q) - d;
        if (fp >= 0) out.push_back(p);
        if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
            const double t = fp / (fp - fq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

std::vector<std::vector<Vec2>> convex_minus_rect(const std::vector<Vec2>& poly, const Rect& r) {
    std::vector<std::vector<Vec2>> pieces;
    auto keep = [&](std::vector<Vec2>&& p) {
        if (p.size() >= 3 && std::fabs(polygon_area(p)) > 0) pieces.push_back(std::move(p));
    };
    keep(clip_halfplane(poly, {-1, 0}, -r.x0));                 // x <= x0
    keep(clip_halfplane(poly, {1, 0}, r.x1));                   // x >= x1
    auto band = clip_halfplane(poly, {1, 0}, r.x0);             // x >= x0
    band = clip_halfplane(band, {-1, 0}, -r.x1);                // x <= x1
    keep(clip_halfplane(band, {0, -1}, -r.y0));                 // y <= y0
    keep(clip_halfplane(band, {0, 1}, r.y1));                   // y >= y1
    return pieces;
}

} // namespace pdlab

#include "pdlab/gamma.hpp"

#include <algorithm>
#include <cmath>

#include "pdlab/errors.hpp"
#include "pdlab/predicates.hpp"
#include "pdlab/rng.hpp"

namespace pdlab {

namespace {

bool strictly_inside_circumdisk(const Triangulation& tri, int t, Vec2 x) {
    const auto& tv = tri.triangles[std::size_t(t)];
    return incircle(tri.point(tv[0]), tri.point(tv[1]), tri.point(tv[2]), x) > 0;
}

int third_vertex(const Triangulation& tri, int t, int u, int v) {
    for (int k = 0; k < 3; ++k) {
        const int w = tri.triangles[std::size_t(t)][std::size_t(k)];
        if (w != u && w != v) return w;
    }
    throw InternalError("triangle does not contain the edge");
}

} // namespace

bool gamma_edge_membership(const Triangulation& tri, int u, int v, Vec2 x) {
    if (!tri.graph.has_edge(u, v)) throw InvalidParameter("not a Delaunay edge");
    const auto inc = tri.edge_triangles(u, v);
    if (inc.size() == 2) {
        return strictly_inside_circumdisk(tri, inc[0], x) &&
               strictly_inside_circumdisk(tri, inc[1], x);
    }
    // Hull edge: the inner side (the side of the incident triangle) never
    // loses the edge; the outer side loses it exactly inside the circumdisk.
    const int w = third_vertex(tri, inc[0], u, v);
    const Vec2 pu = tri.point(u), pv = tri.point(v);
    const int o = orient2d(pu, pv, x);
    const int ow = orient2d(pu, pv, tri.point(w));
    if (o == 0) {
        const Vec2 lo = lex_less(pu, pv) ? pu : pv;
        const Vec2 hi = lex_less(pu, pv) ? pv : pu;
        return lex_less(lo, x) && lex_less(x, hi);
    }
    if ((o > 0) == (ow > 0)) return false;
    return strictly_inside_circumdisk(tri, inc[0], x);
}

GammaArea gamma_path_area(const Triangulation& tri, const std::vector<int>& path, long samples,
                          uint64_t seed) {
    if (samples < 100) throw InvalidParameter("need >= 100 Monte Carlo samples");
    if (path.size() < 2) throw InvalidParameter("path needs at least one edge");

    GammaArea out;
    struct Lens {
        int t1 = -1, t2 = -1;
    };
    std::vector<Lens> lenses;
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int u = path[i], v = path[i + 1];
        if (!tri.graph.has_edge(u, v)) throw InvalidParameter("path step is not an edge");
        const auto inc = tri.edge_triangles(u, v);
        if (inc.size() < 2) {
            ++out.hull_edges_flagged;
            continue;
        }
        ++out.interior_edges;
        lenses.push_back({inc[0], inc[1]});
        // The lens is contained in either disk; bound with the smaller one.
        const Circumdisk& da = tri.circumdisks[std::size_t(inc[0])];
        const Circumdisk& db = tri.circumdisks[std::size_t(inc[1])];
        const Circumdisk& d = da.r2 <= db.r2 ? da : db;
        const double r = std::sqrt(d.r2);
        x0 = std::min(x0, d.center.x - r);
        x1 = std::max(x1, d.center.x + r);
        y0 = std::min(y0, d.center.y - r);
        y1 = std::max(y1, d.center.y + r);
    }
    out.samples = samples;
    if (lenses.empty()) return out;

    Rng rng(derive_seed(seed, "gamma-area", 0));
    long hits = 0;
    for (long s = 0; s < samples; ++s) {
        const Vec2 x{rng.uniform(x0, x1), rng.uniform(y0, y1)};
        for (const Lens& lens : lenses) {
            if (strictly_inside_circumdisk(tri, lens.t1, x) &&
                strictly_inside_circumdisk(tri, lens.t2, x)) {
                ++hits;
                break;
            }
        }
    }
    const double box_area = (x1 - x0) * (y1 - y0);
    const double p = double(hits) / double(samples);
    out.area = box_area * p;
    out.se = box_area * std::sqrt(p * (1 - p) / double(samples));
    return out;
}

std::vector<int> ball_walk(const Triangulation& tri, int v, int u) {
    if (v == u) throw InvalidParameter("ball walk endpoints must differ");
    const int n = int(tri.num_vertices());
    if (v < 0 || v >= n || u < 0 || u >= n) throw InvalidParameter("bad vertex index");

    std::vector<int> path{v};
    int cur = v;
    const Vec2 pu = tri.point(u);
    for (int steps = 0; steps <= n; ++steps) {
        if (cur == u) return path;
        const Vec2 pc = tri.point(cur);
        const Vec2 dir = pu - pc;
        int best = -1;
        double best_num = 0, best_den = 1; // alpha = num/den, den > 0
        for (int w = 0; w < n; ++w) {
            if (w == cur) continue;
            const Vec2 dw = tri.point(w) - pc;
            const double den = dot(dw, dir);
            if (den <= 0) continue;
            const double num = norm2(dw);
            if (num > den) continue; // alpha > 1: outside the diametral ball of [cur, u]
            if (best < 0 || num * best_den < best_num * den ||
                (num * best_den == best_num * den && w < best)) {
                best = w;
                best_num = num;
                best_den = den;
            }
        }
        if (best < 0) throw InternalError("ball walk found no admissible step");
        path.push_back(best);
        cur = best;
    }
    throw InternalError("ball walk failed to terminate");
}

} // namespace pdlab

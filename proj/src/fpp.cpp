#include "pdlab/fpp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "pdlab/errors.hpp"
#include "pdlab/gamma.hpp"
#include "pdlab/rng.hpp"

namespace pdlab {

void EdgeTimeDist::validate() const {
    switch (kind) {
        case Kind::Exponential:
            if (!(rate > 0)) throw InvalidParameter("exponential rate must be > 0");
            break;
        case Kind::Uniform:
            if (!(lo >= 0) || !(hi > lo)) throw InvalidParameter("uniform needs 0 <= lo < hi");
            break;
        case Kind::Deterministic:
            if (!(value >= 0)) throw InvalidParameter("deterministic time must be >= 0");
            break;
        case Kind::BernoulliMix:
            if (!(p0 >= 0 && p0 <= 1)) throw InvalidParameter("mass at zero must be in [0,1]");
            break;
    }
}

double EdgeTimeDist::quantile(double u) const {
    switch (kind) {
        case Kind::Exponential: return -std::log1p(-u) / rate;
        case Kind::Uniform: return lo + (hi - lo) * u;
        case Kind::Deterministic: return value;
        case Kind::BernoulliMix: return u < p0 ? 0.0 : 1.0;
    }
    return 0.0;
}

double EdgeTimeDist::m1() const {
    switch (kind) {
        case Kind::Exponential: return 1.0 / rate;
        case Kind::Uniform: return 0.5 * (lo + hi);
        case Kind::Deterministic: return value;
        case Kind::BernoulliMix: return 1.0 - p0;
    }
    return 0.0;
}

double EdgeTimeDist::m2() const {
    switch (kind) {
        case Kind::Exponential: return 2.0 / (rate * rate);
        case Kind::Uniform: return (lo * lo + lo * hi + hi * hi) / 3.0;
        case Kind::Deterministic: return value * value;
        case Kind::BernoulliMix: return 1.0 - p0;
    }
    return 0.0;
}

double EdgeTimeDist::atom_at_zero() const {
    switch (kind) {
        case Kind::Exponential: return 0.0;
        case Kind::Uniform: return 0.0;
        case Kind::Deterministic: return value == 0.0 ? 1.0 : 0.0;
        case Kind::BernoulliMix: return p0;
    }
    return 0.0;
}

std::string EdgeTimeDist::name() const {
    switch (kind) {
        case Kind::Exponential: return "exponential";
        case Kind::Uniform: return "uniform";
        case Kind::Deterministic: return "deterministic";
        case Kind::BernoulliMix: return "bernoulli-mix";
    }
    return "?";
}

uint64_t edge_coord_key(Vec2 a, Vec2 b) {
    const Vec2 lo = lex_less(a, b) ? a : b;
    const Vec2 hi = lex_less(a, b) ? b : a;
    uint64_t h = double_bits(lo.x);
    h = hash_combine(h, double_bits(lo.y));
    h = hash_combine(h, double_bits(hi.x));
    h = hash_combine(h, double_bits(hi.y));
    return h;
}

double TimedGraph::tau(int u, int v) const {
    const uint64_t key = edge_coord_key(tri->point(u), tri->point(v));
    return nu.quantile(keyed_unit(seed, key));
}

TimedGraph assign_times(std::shared_ptr<const Triangulation> tri, const EdgeTimeDist& nu,
                        uint64_t seed) {
    nu.validate();
    if (!tri) throw InvalidParameter("null triangulation");
    return TimedGraph{std::move(tri), nu, seed};
}

Geodesic ShortestPaths::extract(int target) const {
    Geodesic g;
    g.time = dist[std::size_t(target)];
    int cur = target;
    while (cur >= 0) {
        g.vertices.push_back(cur);
        cur = pred[std::size_t(cur)];
    }
    std::reverse(g.vertices.begin(), g.vertices.end());
    return g;
}

ShortestPaths dijkstra(const TimedGraph& tg, int source) {
    const DelaunayGraph& graph = tg.tri->graph;
    const int n = graph.num_vertices();
    ShortestPaths sp;
    sp.dist.assign(std::size_t(n), std::numeric_limits<double>::infinity());
    sp.hops.assign(std::size_t(n), INT_MAX);
    sp.pred.assign(std::size_t(n), -1);

    struct Entry {
        double d;
        int h;
        int v;
        bool operator>(const Entry& o) const {
            if (d != o.d) return d > o.d;
            if (h != o.h) return h > o.h;
            return v > o.v;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    sp.dist[std::size_t(source)] = 0.0;
    sp.hops[std::size_t(source)] = 0;
    heap.push({0.0, 0, source});
    std::vector<char> done(std::size_t(n), 0);
    while (!heap.empty()) {
        const Entry e = heap.top();
        heap.pop();
        if (done[std::size_t(e.v)]) continue;
        if (e.d != sp.dist[std::size_t(e.v)] || e.h != sp.hops[std::size_t(e.v)]) continue;
        done[std::size_t(e.v)] = 1;
        for (int u : graph.adjacency[std::size_t(e.v)]) {
            if (done[std::size_t(u)]) continue;
            const double nd = e.d + tg.tau(e.v, u);
            const int nh = e.h + 1;
            const std::size_t ui = std::size_t(u);
            bool better = false;
            if (nd < sp.dist[ui])
                better = true;
            else if (nd == sp.dist[ui]) {
                if (nh < sp.hops[ui])
                    better = true;
                else if (nh == sp.hops[ui] && e.v < sp.pred[ui])
                    better = true;
            }
            if (better) {
                sp.dist[ui] = nd;
                sp.hops[ui] = nh;
                sp.pred[ui] = e.v;
                heap.push({nd, nh, u});
            }
        }
    }
    return sp;
}

PassageResult passage_time(const TimedGraph& tg, Vec2 x, Vec2 y) {
    PassageResult out;
    out.source = locate(*tg.tri->points, x);
    out.target = locate(*tg.tri->points, y);
    if (out.source == out.target) {
        out.time = 0.0;
        out.geodesic.vertices = {out.source};
        return out;
    }
    const ShortestPaths sp = dijkstra(tg, out.source);
    out.geodesic = sp.extract(out.target);
    out.time = out.geodesic.time;
    return out;
}

std::vector<int> segment_walk(const Triangulation& tri, Vec2 a, Vec2 b) {
    const Window& w = tri.points->window;
    if (!w.in_analysis_region(a) || !w.in_analysis_region(b))
        throw OutOfWindow("segment endpoints must lie in the analysis region");

    const PointSet& ps = *tri.points;
    int cur = locate(ps, a);
    const int target = locate(ps, b);
    std::vector<int> walk{cur};
    if (a == b) return walk;

    const Vec2 dir = b - a;
    double t = 0.0;
    const int n = int(ps.size());
    for (int guard = 0; guard <= n; ++guard) {
        if (cur == target) return walk;
        const Vec2 pc = ps.points[std::size_t(cur)];
        int best = -1;
        double best_t = 2.0;
        for (int u : tri.graph.adjacency[std::size_t(cur)]) {
            const Vec2 pw = ps.points[std::size_t(u)];
            // |x(t)-pc|^2 - |x(t)-pw|^2 = f0 + 2 t s: crossing into w's cell
            // needs slope s > 0.
            const double s = dot(pw - pc, dir);
            if (s <= 0) continue;
            const double f0 = dist2(a, pc) - dist2(a, pw);
            const double tc = -f0 / (2.0 * s);
            if (tc < t || tc > 1.0 + 1e-12) continue;
            if (tc < best_t || (tc == best_t && u < best)) {
                best_t = tc;
                best = u;
            }
        }
        if (best < 0) throw InternalError("segment walk stalled before reaching v(b)");
        t = best_t;
        cur = best;
        walk.push_back(cur);
    }
    throw InternalError("segment walk exceeded the vertex count");
}

SegmentTime z_n(const TimedGraph& tg, double n) {
    SegmentTime out;
    out.walk = segment_walk(*tg.tri, {0, 0}, {n, 0});
    for (std::size_t i = 0; i + 1 < out.walk.size(); ++i) {
        out.z += tg.tau(out.walk[i], out.walk[i + 1]);
        ++out.edges;
    }
    return out;
}

SurgeryOutcome surgery_remove(const TimedGraph& tg, double n, int v) {
    SurgeryOutcome out;
    const PassageResult before = passage_time(tg, {0, 0}, {n, 0});
    if (v == before.source || v == before.target)
        throw InvalidParameter("cannot remove a geodesic endpoint");
    if (v < 0 || v >= int(tg.tri->num_vertices())) throw InvalidParameter("unknown vertex");
    out.before = before.time;
    out.touched_geodesic = std::find(before.geodesic.vertices.begin(),
                                     before.geodesic.vertices.end(),
                                     v) != before.geodesic.vertices.end();

    const Triangulation reduced = remove_point(*tg.tri, v);
    const TimedGraph tg2{std::make_shared<const Triangulation>(reduced), tg.nu, tg.seed};
    out.after = passage_time(tg2, {0, 0}, {n, 0}).time;
    return out;
}

SurgeryOutcome surgery_insert(const TimedGraph& tg, double n, Vec2 x) {
    SurgeryOutcome out;
    const PassageResult before = passage_time(tg, {0, 0}, {n, 0});
    out.before = before.time;
    out.touched_geodesic = false;
    const auto& rho = before.geodesic.vertices;
    for (std::size_t i = 0; i + 1 < rho.size(); ++i) {
        if (gamma_edge_membership(*tg.tri, rho[i], rho[i + 1], x)) {
            out.touched_geodesic = true;
            break;
        }
    }
    const Triangulation grown = insert_point(*tg.tri, x);
    const TimedGraph tg2{std::make_shared<const Triangulation>(grown), tg.nu, tg.seed};
    const PassageResult after = passage_time(tg2, {0, 0}, {n, 0});
    out.after = after.time;
    // If x captured the cell of 0 or of n, the passage time is measured
    // between different terminal vertices and no comparison is implied.
    out.endpoint_changed = grown.point(after.source) != tg.tri->point(before.source) ||
                           grown.point(after.target) != tg.tri->point(before.target);
    return out;
}

} // namespace pdlab

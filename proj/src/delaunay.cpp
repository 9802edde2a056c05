#include "pdlab/delaunay.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "pdlab/errors.hpp"
#include "pdlab/predicates.hpp"
#include "pdlab/rng.hpp"

// Incremental (Bowyer-Watson) construction with an infinite vertex standing in
// for the outer face, walk-based point location, and Morton-sorted insertion
// for locality. Predicates are exact (filtered double + rational fallback), so
// the cavity never sees an inconsistent sign.
//
// Exactly cocircular quadruples are resolved by keeping already-present
// triangles (the conflict test treats "on circle" as no conflict); under the
// fixed Morton insertion order this is deterministic per point set. Such ties
// have probability zero for Poisson inputs.

namespace pdlab {

namespace {

constexpr int kInf = -1;

struct Tri {
    int v[3]; // CCW; may contain kInf
    int n[3]; // neighbor opposite v[k], -1 = none
    bool alive = true;

    bool infinite() const { return v[0] == kInf || v[1] == kInf || v[2] == kInf; }
    int slot_of_vertex(int vertex) const {
        for (int k = 0; k < 3; ++k)
            if (v[k] == vertex) return k;
        return -1;
    }
    // Slot of the edge {a,b} = slot of the remaining vertex.
    int slot_of_edge(int a, int b) const {
        for (int k = 0; k < 3; ++k)
            if (v[k] != a && v[k] != b) return k;
        return -1;
    }
};

struct Engine {
    const std::vector<Vec2>* pts = nullptr;
    std::vector<Tri> tris;
    std::vector<int> free_list;
    std::vector<uint32_t> mark;
    uint32_t epoch = 0;
    int last_alive = -1;

    Vec2 at(int v) const { return (*pts)[std::size_t(v)]; }

    int new_tri(int a, int b, int c) {
        int id;
        if (!free_list.empty()) {
            id = free_list.back();
            free_list.pop_back();
        } else {
            id = int(tris.size());
            tris.push_back(Tri{});
            mark.push_back(0);
        }
        Tri& t = tris[std::size_t(id)];
        t.v[0] = a;
        t.v[1] = b;
        t.v[2] = c;
        t.n[0] = t.n[1] = t.n[2] = -1;
        t.alive = true;
        return id;
    }

    void kill(int id) {
        tris[std::size_t(id)].alive = false;
        free_list.push_back(id);
    }

    // Conflict test: p strictly inside the (possibly infinite) circumdisk of
    // t. "On the boundary" is not a conflict.
    bool conflicts(int tid, Vec2 p) const {
        const Tri& t = tris[std::size_t(tid)];
        if (!t.infinite()) return incircle(at(t.v[0]), at(t.v[1]), at(t.v[2]), p) > 0;
        // Infinite triangle: with k the slot of the infinite vertex, the
        // region is the open half-plane left of v[k+1] -> v[k+2] plus the
        // open hull segment itself.
        const int k = t.slot_of_vertex(kInf);
        const Vec2 a = at(t.v[(k + 1) % 3]);
        const Vec2 b = at(t.v[(k + 2) % 3]);
        const int o = orient2d(a, b, p);
        if (o != 0) return o > 0;
        const Vec2 lo = lex_less(a, b) ? a : b;
        const Vec2 hi = lex_less(a, b) ? b : a;
        return lex_less(lo, p) && lex_less(p, hi);
    }

    // Walk toward p over finite triangles; returns a triangle whose closed
    // region contains p, or an infinite triangle when p is outside the hull.
    int walk(int start, Vec2 p) const {
        int cur = start;
        if (cur < 0 || !tris[std::size_t(cur)].alive || tris[std::size_t(cur)].infinite())
            cur = any_alive_finite();
        std::size_t guard = tris.size() * 4 + 64;
        while (guard-- > 0) {
            const Tri& t = tris[std::size_t(cur)];
            if (t.infinite()) return cur;
            bool advanced = false;
            for (int k = 0; k < 3; ++k) {
                if (orient2d(at(t.v[(k + 1) % 3]), at(t.v[(k + 2) % 3]), p) < 0) {
                    const int nb = t.n[k];
                    if (nb < 0) throw InternalError("walk fell off the triangulation");
                    cur = nb;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) return cur;
        }
        return scan_for(p);
    }

    int scan_for(Vec2 p) const {
        for (std::size_t i = 0; i < tris.size(); ++i) {
            const Tri& t = tris[i];
            if (!t.alive || t.infinite()) continue;
            bool inside = true;
            for (int k = 0; k < 3 && inside; ++k)
                inside = orient2d(at(t.v[(k + 1) % 3]), at(t.v[(k + 2) % 3]), p) >= 0;
            if (inside) return int(i);
        }
        for (std::size_t i = 0; i < tris.size(); ++i)
            if (tris[i].alive && tris[i].infinite() && conflicts(int(i), p)) return int(i);
        throw InternalError("point location failed");
    }

    int any_alive_finite() const {
        for (std::size_t i = 0; i < tris.size(); ++i)
            if (tris[i].alive && !tris[i].infinite()) return int(i);
        throw InternalError("no finite triangle");
    }

    void init_triangle(int i0, int i1, int i2) {
        if (orient2d(at(i0), at(i1), at(i2)) < 0) std::swap(i1, i2);
        const int f = new_tri(i0, i1, i2);
        const int a = tris[f].v[0], b = tris[f].v[1], c = tris[f].v[2];
        // Infinite triangle across a hull edge (x -> y CCW) is (inf, y, x).
        const int e0 = new_tri(kInf, c, b); // across edge (b, c), opposite a
        const int e1 = new_tri(kInf, a, c); // across edge (c, a), opposite b
        const int e2 = new_tri(kInf, b, a); // across edge (a, b), opposite c
        tris[f].n[0] = e0;
        tris[f].n[1] = e1;
        tris[f].n[2] = e2;
        tris[e0].n[0] = f;
        tris[e1].n[0] = f;
        tris[e2].n[0] = f;
        // Infinite ring: (inf, y, x) shares edge (inf, y) [slot 2] with the
        // next CCW infinite triangle and edge (x, inf) [slot 1] with the
        // previous one.
        tris[e0].n[2] = e1; // e0 edge (inf, c) shared with e1 = (inf, a, c)
        tris[e1].n[1] = e0;
        tris[e1].n[2] = e2;
        tris[e2].n[1] = e1;
        tris[e2].n[2] = e0;
        tris[e0].n[1] = e2;
        last_alive = f;
    }

    struct RingEdge {
        int a = 0;
        int b = 0;
        int outer = -1;
        int outer_slot = -1;
    };
    std::vector<int> cavity_;
    std::vector<int> stack_;
    std::vector<RingEdge> ring_;

    void insert(int vi) {
        const Vec2 p = at(vi);
        int seed = walk(last_alive, p);
        {
            const Tri& t = tris[std::size_t(seed)];
            for (int k = 0; k < 3; ++k)
                if (t.v[k] != kInf && at(t.v[k]) == p)
                    throw DuplicatePoint("insert of an existing point");
        }
        if (!conflicts(seed, p)) {
            bool found = false;
            const Tri t = tris[std::size_t(seed)];
            for (int k = 0; k < 3 && !found; ++k) {
                if (t.n[k] >= 0 && conflicts(t.n[k], p)) {
                    seed = t.n[k];
                    found = true;
                }
            }
            for (std::size_t i = 0; i < tris.size() && !found; ++i) {
                if (tris[i].alive && conflicts(int(i), p)) {
                    seed = int(i);
                    found = true;
                }
            }
            if (!found) throw InternalError("no conflict region for inserted point");
        }

        // Conflict cavity by BFS.
        ++epoch;
        cavity_.clear();
        stack_.assign(1, seed);
        mark[std::size_t(seed)] = epoch;
        while (!stack_.empty()) {
            const int t = stack_.back();
            stack_.pop_back();
            cavity_.push_back(t);
            for (int k = 0; k < 3; ++k) {
                const int nb = tris[std::size_t(t)].n[k];
                if (nb < 0 || mark[std::size_t(nb)] == epoch) continue;
                if (conflicts(nb, p)) {
                    mark[std::size_t(nb)] = epoch;
                    stack_.push_back(nb);
                }
            }
        }

        // Boundary edges, oriented CCW around the cavity.
        ring_.clear();
        for (int t : cavity_) {
            for (int k = 0; k < 3; ++k) {
                const int nb = tris[std::size_t(t)].n[k];
                if (nb >= 0 && mark[std::size_t(nb)] == epoch) continue;
                RingEdge e;
                e.a = tris[std::size_t(t)].v[(k + 1) % 3];
                e.b = tris[std::size_t(t)].v[(k + 2) % 3];
                e.outer = nb;
                if (nb >= 0) e.outer_slot = tris[std::size_t(nb)].slot_of_edge(e.a, e.b);
                ring_.push_back(e);
            }
        }
        if (ring_.empty()) throw InternalError("cavity has no boundary");
        for (int t : cavity_) kill(t);

        // Chain the ring into a cycle and star it from vi.
        auto next_from = [&](int a) -> const RingEdge& {
            for (const RingEdge& e : ring_)
                if (e.a == a) return e;
            throw InternalError("cavity boundary is not a cycle");
        };
        std::vector<int> created;
        created.reserve(ring_.size());
        int a = ring_.front().a;
        const int start = a;
        do {
            const RingEdge& e = next_from(a);
            const int nt = new_tri(vi, e.a, e.b);
            if (e.outer >= 0) {
                tris[std::size_t(nt)].n[0] = e.outer;
                tris[std::size_t(e.outer)].n[e.outer_slot] = nt;
            }
            created.push_back(nt);
            a = e.b;
        } while (a != start);
        if (created.size() != ring_.size()) throw InternalError("cavity boundary is not a single cycle");
        for (std::size_t i = 0; i < created.size(); ++i) {
            const int cur = created[i];
            const int nxt = created[(i + 1) % created.size()];
            tris[std::size_t(cur)].n[1] = nxt; // edge (vi, b) shared with next
            tris[std::size_t(nxt)].n[2] = cur; // edge (vi, a') shared with prev
        }
        for (int t : created) {
            if (!tris[std::size_t(t)].infinite()) {
                last_alive = t;
                break;
            }
        }
    }
};

uint64_t morton_key(Vec2 p, const Window& w) {
    const double nx = (p.x - w.x0) / w.width();
    const double ny = (p.y - w.y0) / w.height();
    auto q = [](double t) {
        long v = long(t * 65535.0);
        v = std::clamp(v, 0L, 65535L);
        return uint32_t(v);
    };
    uint32_t x = q(nx), y = q(ny);
    uint64_t key = 0;
    for (int i = 0; i < 16; ++i) {
        key |= uint64_t((x >> i) & 1u) << (2 * i);
        key |= uint64_t((y >> i) & 1u) << (2 * i + 1);
    }
    return key;
}

Circumdisk circumdisk_of(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 ab = b - a;
    const Vec2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double ab2 = norm2(ab);
    const double ac2 = norm2(ac);
    Circumdisk cd;
    cd.center = {a.x + (ac.y * ab2 - ab.y * ac2) / d, a.y + (ab.x * ac2 - ac.x * ab2) / d};
    cd.r2 = dist2(cd.center, a);
    return cd;
}

// Converts live engine triangles into the canonical immutable form.
Triangulation finalize(std::shared_ptr<const PointSet> ps, const Engine& eng) {
    Triangulation out;
    out.points = std::move(ps);

    for (const Tri& t : eng.tris) {
        if (!t.alive || t.infinite()) continue;
        std::array<int, 3> tv{t.v[0], t.v[1], t.v[2]};
        int rot = 0;
        for (int k = 1; k < 3; ++k)
            if (tv[std::size_t(k)] < tv[std::size_t(rot)]) rot = k;
        std::array<int, 3> canon{tv[std::size_t(rot)], tv[std::size_t((rot + 1) % 3)],
                                 tv[std::size_t((rot + 2) % 3)]};
        out.triangles.push_back(canon);
    }
    std::sort(out.triangles.begin(), out.triangles.end());

    const auto& points = out.points->points;
    out.circumdisks.reserve(out.triangles.size());
    for (const auto& t : out.triangles)
        out.circumdisks.push_back(circumdisk_of(points[std::size_t(t[0])], points[std::size_t(t[1])],
                                                points[std::size_t(t[2])]));

    // Neighbor table + hull via sorted half-edge matching.
    auto edge_key = [](int u, int v) {
        const uint64_t lo = uint64_t(std::min(u, v));
        const uint64_t hi = uint64_t(std::max(u, v));
        return (hi << 32) | lo;
    };
    struct Half {
        uint64_t key;
        int tri;
        int slot;
    };
    std::vector<Half> halves;
    halves.reserve(out.triangles.size() * 3);
    out.neighbors.assign(out.triangles.size(), {-1, -1, -1});
    for (int ti = 0; ti < int(out.triangles.size()); ++ti) {
        const auto& t = out.triangles[std::size_t(ti)];
        for (int k = 0; k < 3; ++k)
            halves.push_back(
                {edge_key(t[std::size_t((k + 1) % 3)], t[std::size_t((k + 2) % 3)]), ti, k});
    }
    std::sort(halves.begin(), halves.end(), [](const Half& a, const Half& b) { return a.key < b.key; });
    std::vector<uint64_t> edge_keys; // unique undirected edges
    edge_keys.reserve(halves.size() / 2 + 8);
    for (std::size_t i = 0; i < halves.size();) {
        edge_keys.push_back(halves[i].key);
        if (i + 1 < halves.size() && halves[i + 1].key == halves[i].key) {
            out.neighbors[std::size_t(halves[i].tri)][std::size_t(halves[i].slot)] = halves[i + 1].tri;
            out.neighbors[std::size_t(halves[i + 1].tri)][std::size_t(halves[i + 1].slot)] =
                halves[i].tri;
            i += 2;
        } else {
            i += 1;
        }
    }

    // Hull edges in CCW cycle order: a boundary edge of triangle ti at slot k
    // runs v[k+1] -> v[k+2] with the interior on its left.
    std::unordered_map<int, int> hull_next;
    for (int ti = 0; ti < int(out.triangles.size()); ++ti)
        for (int k = 0; k < 3; ++k)
            if (out.neighbors[std::size_t(ti)][std::size_t(k)] < 0) {
                const auto& t = out.triangles[std::size_t(ti)];
                hull_next[t[std::size_t((k + 1) % 3)]] = t[std::size_t((k + 2) % 3)];
            }
    if (!hull_next.empty()) {
        int start = hull_next.begin()->first;
        for (const auto& [a, b] : hull_next) start = std::min(start, a);
        int cur = start;
        do {
            auto it = hull_next.find(cur);
            if (it == hull_next.end()) throw InternalError("broken hull cycle");
            out.hull_edges.emplace_back(cur, it->second);
            cur = it->second;
        } while (cur != start && out.hull_edges.size() <= hull_next.size());
        if (out.hull_edges.size() != hull_next.size()) throw InternalError("hull is not a single cycle");
    }

    // Adjacency lists.
    out.graph.adjacency.assign(out.points->size(), {});
    for (uint64_t key : edge_keys) {
        const int u = int(key & 0xffffffffu);
        const int v = int(key >> 32);
        out.graph.adjacency[std::size_t(u)].push_back(v);
        out.graph.adjacency[std::size_t(v)].push_back(u);
    }
    for (auto& lst : out.graph.adjacency) std::sort(lst.begin(), lst.end());
    out.graph.degree.resize(out.graph.adjacency.size());
    for (std::size_t i = 0; i < out.graph.adjacency.size(); ++i)
        out.graph.degree[i] = int(out.graph.adjacency[i].size());

    return out;
}

void check_distinct(const std::vector<Vec2>& pts) {
    std::unordered_set<uint64_t> seen;
    seen.reserve(pts.size() * 2);
    for (const Vec2& p : pts)
        if (!seen.insert(hash_combine(double_bits(p.x), double_bits(p.y))).second)
            throw DuplicatePoint("point set contains duplicate coordinates");
}

Engine build_engine(const std::vector<Vec2>& pts, const Window& window) {
    Engine eng;
    eng.pts = &pts;
    eng.tris.reserve(pts.size() * 2 + 16);
    eng.mark.reserve(pts.size() * 2 + 16);
    std::vector<std::pair<uint64_t, int>> keyed(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        keyed[i] = {morton_key(pts[i], window), int(i)};
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> order(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) order[i] = keyed[i].second;

    // First non-collinear triple in insertion order.
    const int i0 = order[0];
    const int i1 = order[1];
    int i2 = -1;
    for (std::size_t k = 2; k < order.size(); ++k) {
        if (orient2d(pts[std::size_t(i0)], pts[std::size_t(i1)], pts[std::size_t(order[k])]) != 0) {
            i2 = order[k];
            break;
        }
    }
    if (i2 < 0) throw DegenerateInput("all points are collinear");
    eng.init_triangle(i0, i1, i2);
    for (std::size_t k = 2; k < order.size(); ++k) {
        if (order[k] == i2) continue;
        eng.insert(order[k]);
    }
    return eng;
}

// Rebuilds engine state from a canonical triangulation so that insert_point
// can run a genuinely incremental cavity update.
Engine engine_from(const Triangulation& tri) {
    Engine eng;
    eng.pts = &tri.points->points;
    eng.tris.reserve(tri.triangles.size() + tri.hull_edges.size());
    for (const auto& t : tri.triangles) eng.new_tri(t[0], t[1], t[2]);
    for (std::size_t ti = 0; ti < tri.triangles.size(); ++ti)
        for (int k = 0; k < 3; ++k)
            eng.tris[ti].n[k] = tri.neighbors[ti][std::size_t(k)];
    eng.mark.assign(eng.tris.size(), 0);

    // Infinite triangles around the hull; hull_edges are CCW (a -> b).
    std::vector<int> inf_ids;
    inf_ids.reserve(tri.hull_edges.size());
    std::unordered_map<uint64_t, int> edge_to_tri;
    auto edge_key = [](int u, int v) {
        return (uint64_t(std::max(u, v)) << 32) | uint64_t(std::min(u, v));
    };
    for (std::size_t ti = 0; ti < tri.triangles.size(); ++ti)
        for (int k = 0; k < 3; ++k)
            if (tri.neighbors[ti][std::size_t(k)] < 0) {
                const auto& t = tri.triangles[ti];
                edge_to_tri[edge_key(t[std::size_t((k + 1) % 3)], t[std::size_t((k + 2) % 3)])] =
                    int(ti) * 3 + k;
            }
    for (const auto& [a, b] : tri.hull_edges) {
        const int id = eng.new_tri(kInf, b, a);
        const auto packed = edge_to_tri.at(edge_key(a, b));
        const int ft = packed / 3;
        const int fk = packed % 3;
        eng.tris[std::size_t(id)].n[0] = ft;
        eng.tris[std::size_t(ft)].n[fk] = id;
        inf_ids.push_back(id);
    }
    for (std::size_t i = 0; i < inf_ids.size(); ++i) {
        const int cur = inf_ids[i];
        const int nxt = inf_ids[(i + 1) % inf_ids.size()];
        eng.tris[std::size_t(cur)].n[2] = nxt; // shares (inf, b) with next
        eng.tris[std::size_t(nxt)].n[1] = cur;
    }
    eng.mark.assign(eng.tris.size(), 0);
    eng.last_alive = tri.triangles.empty() ? -1 : 0;
    return eng;
}

} // namespace

bool DelaunayGraph::has_edge(int u, int v) const {
    const auto& lst = adjacency[std::size_t(u)];
    return std::binary_search(lst.begin(), lst.end(), v);
}

std::size_t DelaunayGraph::num_edges() const {
    std::size_t s = 0;
    for (const auto& lst : adjacency) s += lst.size();
    return s / 2;
}

bool Triangulation::is_hull_vertex(int v) const {
    for (const auto& [a, b] : hull_edges)
        if (a == v || b == v) return true;
    return false;
}

std::vector<int> Triangulation::edge_triangles(int u, int v) const {
    std::vector<int> out;
    for (int ti = 0; ti < int(triangles.size()); ++ti) {
        const auto& t = triangles[std::size_t(ti)];
        int hits = 0;
        for (int k = 0; k < 3; ++k) hits += (t[std::size_t(k)] == u || t[std::size_t(k)] == v);
        if (hits == 2) out.push_back(ti);
    }
    return out;
}

Triangulation build_delaunay(std::shared_ptr<const PointSet> ps) {
    if (!ps) throw InvalidParameter("null point set");
    if (ps->size() < 3) throw DegenerateInput("need >= 3 points; use delaunay_graph_small");
    check_distinct(ps->points);
    Engine eng = build_engine(ps->points, ps->window);
    return finalize(std::move(ps), eng);
}

Triangulation build_delaunay(const PointSet& ps) {
    return build_delaunay(std::make_shared<const PointSet>(ps));
}

DelaunayGraph delaunay_graph_small(const PointSet& ps) {
    if (ps.size() == 0) throw EmptyConfiguration("no points");
    if (ps.size() > 2) throw InvalidParameter("delaunay_graph_small is for 1 or 2 points");
    DelaunayGraph g;
    g.adjacency.assign(ps.size(), {});
    if (ps.size() == 2) {
        g.adjacency[0] = {1};
        g.adjacency[1] = {0};
    }
    g.degree.resize(ps.size());
    for (std::size_t i = 0; i < g.adjacency.size(); ++i) g.degree[i] = int(g.adjacency[i].size());
    return g;
}

Triangulation insert_point(const Triangulation& tri, Vec2 x) {
    for (const Vec2& p : tri.points->points)
        if (p == x) throw DuplicatePoint("point already present");
    auto ps = std::make_shared<PointSet>(*tri.points);
    ps->points.push_back(x);
    Engine eng = engine_from(tri);
    eng.pts = &ps->points;
    eng.insert(int(ps->points.size()) - 1);
    return finalize(std::shared_ptr<const PointSet>(ps), eng);
}

Triangulation remove_point(const Triangulation& tri, int v) {
    if (v < 0 || v >= int(tri.points->size())) throw InvalidParameter("unknown vertex index");
    auto ps = std::make_shared<PointSet>(*tri.points);
    ps->points.erase(ps->points.begin() + v);
    if (ps->size() < 3) throw DegenerateInput("removal leaves < 3 points; use delaunay_graph_small");
    return build_delaunay(std::shared_ptr<const PointSet>(ps));
}

double mean_degree(const Triangulation& tri) {
    Window region = tri.points->window;
    region.x0 += region.buffer;
    region.x1 -= region.buffer;
    region.y0 += region.buffer;
    region.y1 -= region.buffer;
    region.buffer = 0;
    return mean_degree(tri, region);
}

double mean_degree(const Triangulation& tri, const Window& region) {
    if (!(region.x0 < region.x1) || !(region.y0 < region.y1))
        throw InvalidParameter("empty analysis region");
    double sum = 0;
    long count = 0;
    for (std::size_t i = 0; i < tri.points->size(); ++i) {
        if (!region.contains(tri.points->points[i])) continue;
        sum += tri.graph.degree[i];
        ++count;
    }
    if (count == 0) throw InvalidParameter("no vertices in analysis region");
    return sum / double(count);
}

std::optional<int> find_triangle(const Triangulation& tri, Vec2 x) {
    if (tri.triangles.empty()) return std::nullopt;
    const auto& pts = tri.points->points;
    int cur = 0;
    std::size_t guard = tri.triangles.size() * 4 + 64;
    while (guard-- > 0) {
        const auto& t = tri.triangles[std::size_t(cur)];
        bool advanced = false;
        for (int k = 0; k < 3; ++k) {
            const Vec2 a = pts[std::size_t(t[std::size_t((k + 1) % 3)])];
            const Vec2 b = pts[std::size_t(t[std::size_t((k + 2) % 3)])];
            if (orient2d(a, b, x) < 0) {
                const int nb = tri.neighbors[std::size_t(cur)][std::size_t(k)];
                if (nb < 0) return std::nullopt; // exits through the hull
                cur = nb;
                advanced = true;
                break;
            }
        }
        if (!advanced) return cur;
    }
    // Fallback scan for degenerate walk cycles.
    for (int ti = 0; ti < int(tri.triangles.size()); ++ti) {
        const auto& t = tri.triangles[std::size_t(ti)];
        bool inside = true;
        for (int k = 0; k < 3 && inside; ++k)
            inside = orient2d(pts[std::size_t(t[std::size_t((k + 1) % 3)])],
                              pts[std::size_t(t[std::size_t((k + 2) % 3)])], x) >= 0;
        if (inside) return ti;
    }
    return std::nullopt;
}

} // namespace pdlab

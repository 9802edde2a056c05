#include "pdlab/percolation.hpp"

#include <cmath>

#include "pdlab/errors.hpp"
#include "pdlab/fpp.hpp"
#include "pdlab/rng.hpp"

namespace pdlab {

bool BondField::open(int u, int v) const {
    const uint64_t key = edge_coord_key(tri->point(u), tri->point(v));
    return keyed_unit(hash_combine(seed, 0xb0ed0ULL), key) < p;
}

BondField make_bond_field(std::shared_ptr<const Triangulation> tri, double p, uint64_t seed) {
    if (!(p >= 0 && p <= 1)) throw InvalidParameter("bond probability must be in [0,1]");
    if (!tri) throw InvalidParameter("null triangulation");
    return BondField{std::move(tri), p, seed};
}

std::vector<int> open_cluster(const BondField& bf) {
    const int root = locate(*bf.tri->points, {0, 0});
    std::vector<char> seen(bf.tri->num_vertices(), 0);
    std::vector<int> stack{root}, cluster;
    seen[std::size_t(root)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        cluster.push_back(v);
        for (int u : bf.tri->graph.adjacency[std::size_t(v)]) {
            if (seen[std::size_t(u)] || !bf.open(v, u)) continue;
            seen[std::size_t(u)] = 1;
            stack.push_back(u);
        }
    }
    std::sort(cluster.begin(), cluster.end());
    return cluster;
}

bool good_box_Y(const BondField& bf, double L, GridSite z, int d) {
    const Triangulation& tri = *bf.tri;
    const BoxGrid grid{L / 2.0, 1};
    // (i) all boxes within Linf distance 2 of z are nice.
    for (int dy = -2; dy <= 2; ++dy)
        for (int dx = -2; dx <= 2; ++dx)
            if (!classify_box(*tri.points, grid, {z.x + dx, z.y + dy}, BoxMode::Nice, d))
                return false;

    // (ii) no all-closed Delaunay path from the inner box to the boundary of
    // the concentric 3L/2 box.
    const Vec2 c = grid.box_center(z);
    const double inner = L / 4.0;  // half-side of the L/2 box
    const double outer = 3.0 * L / 4.0;
    std::vector<char> seen(tri.num_vertices(), 0);
    std::vector<int> stack;
    for (int v = 0; v < int(tri.num_vertices()); ++v) {
        const Vec2 p = tri.point(v);
        if (std::fabs(p.x - c.x) < inner && std::fabs(p.y - c.y) < inner) {
            seen[std::size_t(v)] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : tri.graph.adjacency[std::size_t(v)]) {
            if (seen[std::size_t(u)] || bf.open(v, u)) continue; // follow closed edges only
            const Vec2 p = tri.point(u);
            if (dist_inf(p, c) >= outer) return false; // reached the 3L/2 boundary
            seen[std::size_t(u)] = 1;
            stack.push_back(u);
        }
    }
    return true;
}

namespace {

struct SparsePathDfs {
    const BondField& bf;
    const DelaunayGraph& graph;
    int m;
    long max_open;
    long budget;
    long steps = 0;
    std::vector<char> used;

    bool dfs(int v, int remaining, long open_count) {
        if (++steps > budget) throw BudgetExceeded("sparse path search budget");
        if (open_count > max_open) return false;
        if (remaining == 0) return true;
        used[std::size_t(v)] = 1;
        for (int u : graph.adjacency[std::size_t(v)]) {
            if (used[std::size_t(u)]) continue;
            if (dfs(u, remaining - 1, open_count + (bf.open(v, u) ? 1 : 0))) {
                used[std::size_t(v)] = 0;
                return true;
            }
        }
        used[std::size_t(v)] = 0;
        return false;
    }
};

} // namespace

bool sparse_open_path_exists(const BondField& bf, int m, double a, long budget) {
    if (m < 1) throw InvalidParameter("path length must be >= 1");
    const DelaunayGraph& graph = bf.tri->graph;
    SparsePathDfs dfs{bf, graph, m, long(std::floor(a * m)), budget, 0,
                      std::vector<char>(graph.adjacency.size(), 0)};
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (dfs.dfs(v, m, 0)) return true;
    return false;
}

} // namespace pdlab

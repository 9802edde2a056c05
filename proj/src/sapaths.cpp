#include "pdlab/sapaths.hpp"

#include <map>
#include <set>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

struct DfsCounter {
    const DelaunayGraph& graph;
    std::vector<char> blocked;
    long budget;
    long steps = 0;

    long count(int v, int remaining) {
        if (++steps > budget) throw BudgetExceeded("self-avoiding path enumeration budget");
        if (remaining == 0) return 1;
        long total = 0;
        blocked[std::size_t(v)] = 1;
        for (int u : graph.adjacency[std::size_t(v)]) {
            if (blocked[std::size_t(u)]) continue;
            total += count(u, remaining - 1);
        }
        blocked[std::size_t(v)] = 0;
        return total;
    }
};

} // namespace

long count_sa_paths(const DelaunayGraph& graph, int start, int r, const std::vector<int>& forbidden,
                    long budget) {
    if (r < 0) throw InvalidParameter("path length must be >= 0");
    if (start < 0 || start >= graph.num_vertices()) throw InvalidParameter("bad start vertex");
    DfsCounter dfs{graph, std::vector<char>(graph.adjacency.size(), 0), budget};
    for (int v : forbidden) dfs.blocked[std::size_t(v)] = 1;
    if (dfs.blocked[std::size_t(start)]) return 0;
    return dfs.count(start, r);
}

namespace {

struct ProductMax {
    const DelaunayGraph& graph;
    std::vector<char> used;
    long budget;
    long steps = 0;
    double best = 0.0;

    // Max of prod deg over self-avoiding paths with `remaining` more edges.
    void walk(int v, int remaining, double product) {
        if (++steps > budget) throw BudgetExceeded("degree product enumeration budget");
        product *= double(graph.degree[std::size_t(v)]);
        if (remaining == 0) {
            best = std::max(best, product);
            return;
        }
        used[std::size_t(v)] = 1;
        for (int u : graph.adjacency[std::size_t(v)]) {
            if (used[std::size_t(u)]) continue;
            walk(u, remaining - 1, product);
        }
        used[std::size_t(v)] = 0;
    }
};

} // namespace

DegreeProductCheck degree_product_bound_check(const DelaunayGraph& graph, int start, int r,
                                              long budget) {
    if (r < 1) throw InvalidParameter("bound check needs r >= 1");
    DegreeProductCheck out;
    out.count = count_sa_paths(graph, start, r, {}, budget);
    ProductMax pm{graph, std::vector<char>(graph.adjacency.size(), 0), budget};
    pm.walk(start, r - 1, 1.0);
    out.bound = pm.best;
    out.ok = double(out.count) <= out.bound;
    return out;
}

namespace {

struct AnimalDfs {
    const Triangulation& tri;
    BoxGrid grid;
    int target_len;
    long budget;
    long steps = 0;
    std::vector<char> used;
    std::vector<int> path;
    long min_at_target = -1;
    long max_any = 0;

    // Incremental animal: multiset of sites with reference counts so segments
    // can be pushed and popped.
    std::map<GridSite, int> site_refs;

    void add_sites(const std::vector<GridSite>& sites) {
        for (const GridSite& s : sites) ++site_refs[s];
    }
    void remove_sites(const std::vector<GridSite>& sites) {
        for (const GridSite& s : sites) {
            auto it = site_refs.find(s);
            if (--it->second == 0) site_refs.erase(it);
        }
    }

    std::vector<GridSite> segment_sites(Vec2 a, Vec2 b) {
        const GridAnimal an = animal_of({}, {{a, b}}, grid.r, grid.shift_index);
        return an.sites;
    }

    void dfs(int v) {
        if (++steps > budget) throw BudgetExceeded("covering extremes enumeration budget");
        max_any = std::max(max_any, long(site_refs.size()));
        if (int(path.size()) - 1 == target_len) {
            const long sz = long(site_refs.size());
            if (min_at_target < 0 || sz < min_at_target) min_at_target = sz;
            return;
        }
        used[std::size_t(v)] = 1;
        for (int u : tri.graph.adjacency[std::size_t(v)]) {
            if (used[std::size_t(u)]) continue;
            const auto sites = segment_sites(tri.point(v), tri.point(u));
            add_sites(sites);
            path.push_back(u);
            dfs(u);
            path.pop_back();
            remove_sites(sites);
        }
        used[std::size_t(v)] = 0;
    }
};

} // namespace

CoveringExtremes covering_extremes(const Triangulation& tri, int start, int r, double L,
                                   long budget) {
    if (r < 0) throw InvalidParameter("path length must be >= 0");
    if (!(L > 0)) throw InvalidParameter("box scale must be > 0");
    AnimalDfs dfs{tri, BoxGrid{L, 1}, r, budget, 0, {}, {}, -1, 0, {}};
    dfs.used.assign(tri.graph.adjacency.size(), 0);
    dfs.path.push_back(start);
    dfs.add_sites({dfs.grid.site_of(tri.point(start))});
    dfs.dfs(start);
    CoveringExtremes out;
    // Any path of length > r extends one of length exactly r and only grows
    // its animal, so the minimum over "length >= r" is attained at length r.
    out.g_min = dfs.min_at_target < 0 ? long(dfs.site_refs.size()) : dfs.min_at_target;
    out.g_max = dfs.max_any;
    return out;
}

} // namespace pdlab

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pdlab/fpp.hpp"
#include "pdlab/rng.hpp"
#include "pdlab/stats.hpp"

using namespace pdlab;

namespace {

std::shared_ptr<const Triangulation> random_delaunay(uint64_t seed, double side = 14,
                                                     double lambda = 0.6) {
    const PointSet ps = sample_poisson(Window{0, side, 0, side, 2},
                                       {IntensityModel::Kind::Homogeneous, lambda, 0, 1}, seed);
    return std::make_shared<const Triangulation>(build_delaunay(ps));
}

// Brute-force oracle: minimal (time, hops) over all simple paths, summing
// times in path order.
struct BruteBest {
    double time = std::numeric_limits<double>::infinity();
    int hops = INT_MAX;
};

void brute_dfs(const TimedGraph& tg, int v, int target, std::vector<char>& used, double t, int h,
               BruteBest& best) {
    if (v == target) {
        if (t < best.time || (t == best.time && h < best.hops)) best = {t, h};
        return;
    }
    used[std::size_t(v)] = 1;
    for (int u : tg.tri->graph.adjacency[std::size_t(v)]) {
        if (used[std::size_t(u)]) continue;
        brute_dfs(tg, u, target, used, t + tg.tau(v, u), h + 1, best);
    }
    used[std::size_t(v)] = 0;
}

BruteBest brute_passage(const TimedGraph& tg, int s, int t) {
    std::vector<char> used(tg.tri->num_vertices(), 0);
    BruteBest best;
    brute_dfs(tg, s, t, used, 0.0, 0, best);
    return best;
}

std::shared_ptr<const Triangulation> tiny_delaunay(uint64_t seed) {
    // Rejection-sample a small instance with <= 9 vertices.
    for (uint64_t s = seed;; ++s) {
        const PointSet ps = sample_poisson(Window{0, 4, 0, 4, 0},
                                           {IntensityModel::Kind::Homogeneous, 0.45, 0, 1}, s);
        if (ps.size() >= 4 && ps.size() <= 9) {
            try {
                return std::make_shared<const Triangulation>(build_delaunay(ps));
            } catch (const DegenerateInput&) {
            }
        }
    }
}

} // namespace

TEST_CASE("edge time distribution moments and atoms") {
    EdgeTimeDist expo{EdgeTimeDist::Kind::Exponential, 2.0, 0, 1, 1, 0};
    CHECK(expo.m1() == doctest::Approx(0.5));
    CHECK(expo.m2() == doctest::Approx(0.5));
    CHECK(expo.atom_at_zero() == 0.0);

    EdgeTimeDist uni{EdgeTimeDist::Kind::Uniform, 1, 1.0, 3.0, 1, 0};
    CHECK(uni.m1() == doctest::Approx(2.0));
    CHECK(uni.m2() == doctest::Approx((1.0 + 3.0 + 9.0) / 3.0));

    EdgeTimeDist det{EdgeTimeDist::Kind::Deterministic, 1, 0, 1, 4.0, 0};
    CHECK(det.m1() == 4.0);
    CHECK(det.m2() == 16.0);

    EdgeTimeDist mix{EdgeTimeDist::Kind::BernoulliMix, 1, 0, 1, 1, 0.3};
    CHECK(mix.m1() == doctest::Approx(0.7));
    CHECK(mix.m2() == doctest::Approx(0.7));
    CHECK(mix.atom_at_zero() == doctest::Approx(0.3));
}

TEST_CASE("times are reproducible and keyed by edge coordinates") {
    const auto tri = random_delaunay(21);
    const EdgeTimeDist nu{EdgeTimeDist::Kind::Exponential, 1.0, 0, 1, 1, 0};
    const TimedGraph a = assign_times(tri, nu, 5);
    const TimedGraph b = assign_times(tri, nu, 5);
    const TimedGraph c = assign_times(tri, nu, 6);
    bool all_equal = true, any_diff = false;
    for (int u = 0; u < int(tri->num_vertices()); ++u)
        for (int v : tri->graph.adjacency[std::size_t(u)]) {
            if (v < u) continue;
            all_equal &= (a.tau(u, v) == b.tau(u, v));
            any_diff |= (a.tau(u, v) != c.tau(u, v));
            CHECK(a.tau(u, v) == a.tau(v, u)); // symmetric lookup
        }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("exponential edge times have the right sample mean") {
    const auto tri = random_delaunay(77, 40, 1.0); // thousands of edges
    const TimedGraph tg =
        assign_times(tri, {EdgeTimeDist::Kind::Exponential, 1.0, 0, 1, 1, 0}, 11);
    std::vector<double> times;
    for (int u = 0; u < int(tri->num_vertices()); ++u)
        for (int v : tri->graph.adjacency[std::size_t(u)])
            if (u < v) times.push_back(tg.tau(u, v));
    REQUIRE(times.size() > 2000);
    const auto ms = mean_se(times);
    CHECK(std::fabs(ms.mean - 1.0) <= 3 * ms.se);
}

TEST_CASE("deterministic unit times make T the hop distance") {
    const auto tri = random_delaunay(31);
    const TimedGraph tg =
        assign_times(tri, {EdgeTimeDist::Kind::Deterministic, 1, 0, 1, 1.0, 0}, 0);
    const ShortestPaths sp = dijkstra(tg, 0);
    // BFS oracle.
    std::vector<int> bfs(tri->num_vertices(), -1);
    std::vector<int> queue{0};
    bfs[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int u : tri->graph.adjacency[std::size_t(queue[i])])
            if (bfs[std::size_t(u)] < 0) {
                bfs[std::size_t(u)] = bfs[std::size_t(queue[i])] + 1;
                queue.push_back(u);
            }
    for (int v = 0; v < int(tri->num_vertices()); ++v) {
        CHECK(sp.dist[std::size_t(v)] == doctest::Approx(double(bfs[std::size_t(v)])));
        CHECK(sp.hops[std::size_t(v)] == bfs[std::size_t(v)]);
    }
}

TEST_CASE("dijkstra equals brute-force enumeration on tiny instances") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const auto tri = tiny_delaunay(1000 + seed * 37);
        const TimedGraph tg =
            assign_times(tri, {EdgeTimeDist::Kind::Exponential, 1.0, 0, 1, 1, 0}, seed);
        const int n = int(tri->num_vertices());
        for (int s = 0; s < n; ++s) {
            const ShortestPaths sp = dijkstra(tg, s);
            for (int t = 0; t < n; ++t) {
                const BruteBest oracle = brute_passage(tg, s, t);
                CHECK(sp.dist[std::size_t(t)] == doctest::Approx(oracle.time).epsilon(1e-12));
                CHECK(sp.hops[std::size_t(t)] == oracle.hops);
            }
        }
    }
}

TEST_CASE("T is a pseudometric and symmetric in its arguments") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const auto tri = tiny_delaunay(5000 + seed * 13);
        const TimedGraph tg =
            assign_times(tri, {EdgeTimeDist::Kind::Uniform, 1, 0.0, 2.0, 1, 0}, seed);
        const int n = int(tri->num_vertices());
        std::vector<ShortestPaths> all;
        for (int s = 0; s < n; ++s) all.push_back(dijkstra(tg, s));
        for (int u = 0; u < n; ++u) {
            CHECK(all[std::size_t(u)].dist[std::size_t(u)] == 0.0);
            for (int v = 0; v < n; ++v) {
                CHECK(all[std::size_t(u)].dist[std::size_t(v)] ==
                      doctest::Approx(all[std::size_t(v)].dist[std::size_t(u)]).epsilon(1e-12));
                for (int w = 0; w < n; ++w)
                    CHECK(all[std::size_t(u)].dist[std::size_t(w)] <=
                          all[std::size_t(u)].dist[std::size_t(v)] +
                              all[std::size_t(v)].dist[std::size_t(w)] + 1e-9);
            }
        }
    }
}

TEST_CASE("passage_time between coincident cells is zero") {
    const auto tri = random_delaunay(3);
    const TimedGraph tg = assign_times(tri, {EdgeTimeDist::Kind::Exponential, 1, 0, 1, 1, 0}, 1);
    const auto r = passage_time(tg, {7.0, 7.0}, {7.0 + 1e-9, 7.0});
    CHECK(r.time == 0.0);
    CHECK(r.geodesic.vertices.size() == 1);
}

TEST_CASE("scaling all edge times up never lowers T") {
    const auto tri = random_delaunay(13);
    const TimedGraph base =
        assign_times(tri, {EdgeTimeDist::Kind::Uniform, 1, 0.0, 1.0, 1, 0}, 2);
    const TimedGraph doubled =
        assign_times(tri, {EdgeTimeDist::Kind::Uniform, 1, 0.0, 2.0, 1, 0}, 2);
    // Same keyed uniforms, pointwise doubled times.
    const ShortestPaths a = dijkstra(base, 0);
    const ShortestPaths b = dijkstra(doubled, 0);
    for (std::size_t v = 0; v < a.dist.size(); ++v) CHECK(b.dist[v] >= a.dist[v] - 1e-12);
}

TEST_CASE("segment walk: single cell, adjacency, ordering, Z_n dominance") {
    const auto tri = random_delaunay(91, 26, 1.0);
    // Tiny segment inside one cell.
    const int v = locate(*tri->points, {13, 13});
    const Vec2 p = tri->points->points[std::size_t(v)];
    const auto walk1 = segment_walk(*tri, p, {p.x + 1e-9, p.y});
    CHECK(walk1 == std::vector<int>{v});

    const auto walk = segment_walk(*tri, {4, 13}, {22, 13});
    REQUIRE(walk.size() >= 2);
    CHECK(walk.front() == locate(*tri->points, {4, 13}));
    CHECK(walk.back() == locate(*tri->points, {22, 13}));
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        CHECK(tri->graph.has_edge(walk[i], walk[i + 1]));
    // Distinct vertices (cells are convex; the segment never re-enters).
    auto sorted = walk;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    CHECK_THROWS_AS(segment_walk(*tri, {-50, 0}, {1, 1}), OutOfWindow);
}

TEST_CASE("Z_n dominates T_n and unit times make Z the edge count") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const PointSet ps = sample_poisson(Window{-8, 20, -10, 10, 4},
                                           {IntensityModel::Kind::Homogeneous, 1.0, 0, 1},
                                           3000 + seed);
        auto tri = std::make_shared<const Triangulation>(build_delaunay(ps));
        const TimedGraph tg =
            assign_times(tri, {EdgeTimeDist::Kind::Exponential, 1.0, 0, 1, 1, 0}, seed);
        const auto seg = z_n(tg, 8.0);
        const auto direct = passage_time(tg, {0, 0}, {8, 0});
        CHECK(direct.time <= seg.z + 1e-12);

        const TimedGraph unit =
            assign_times(tri, {EdgeTimeDist::Kind::Deterministic, 1, 0, 1, 1.0, 0}, seed);
        const auto seg1 = z_n(unit, 8.0);
        CHECK(seg1.z == doctest::Approx(double(seg1.edges)));
    }
}

TEST_CASE("surgery: removing off-geodesic vertices never raises T") {
    Rng rng(8);
    int checked = 0;
    for (uint64_t seed = 0; seed < 25 && checked < 60; ++seed) {
        const PointSet ps = sample_poisson(Window{-8, 18, -9, 9, 3},
                                           {IntensityModel::Kind::Homogeneous, 1.0, 0, 1},
                                           4000 + seed);
        auto tri = std::make_shared<const Triangulation>(build_delaunay(ps));
        const TimedGraph tg =
            assign_times(tri, {EdgeTimeDist::Kind::Exponential, 1.0, 0, 1, 1, 0}, seed);
        const auto base = passage_time(tg, {0, 0}, {7, 0});
        for (int trial = 0; trial < 4; ++trial) {
            const int v = int(rng.next_below(tri->num_vertices()));
            if (v == base.source || v == base.target) continue;
            const auto res = surgery_remove(tg, 7.0, v);
            ++checked;
            if (!res.touched_geodesic) CHECK(res.after <= res.before + 1e-12);
        }
    }
    CHECK(checked >= 40);
}

TEST_CASE("surgery: inserting outside Gamma(rho) never raises T") {
    Rng rng(9);
    int checked = 0, outside = 0;
    for (uint64_t seed = 0; seed < 25 && checked < 60; ++seed) {
        const PointSet ps = sample_poisson(Window{-8, 18, -9, 9, 3},
                                           {IntensityModel::Kind::Homogeneous, 1.0, 0, 1},
                                           4200 + seed);
        auto tri = std::make_shared<const Triangulation>(build_delaunay(ps));
        const TimedGraph tg =
            assign_times(tri, {EdgeTimeDist::Kind::Exponential, 1.0, 0, 1, 1, 0}, seed);
        for (int trial = 0; trial < 4; ++trial) {
            const Vec2 x{rng.uniform(-6, 16), rng.uniform(-7, 7)};
            const auto res = surgery_insert(tg, 7.0, x);
            ++checked;
            if (!res.touched_geodesic && !res.endpoint_changed) {
                ++outside;
                CHECK(res.after <= res.before + 1e-12);
            }
        }
    }
    CHECK(outside >= 20);
}

TEST_CASE("surgery endpoint removal is rejected") {
    const PointSet ps = sample_poisson(Window{-8, 18, -9, 9, 3},
                                       {IntensityModel::Kind::Homogeneous, 1.0, 0, 1}, 4400);
    auto tri = std::make_shared<const Triangulation>(build_delaunay(ps));
    const TimedGraph tg = assign_times(tri, {EdgeTimeDist::Kind::Exponential, 1, 0, 1, 1, 0}, 1);
    const auto base = passage_time(tg, {0, 0}, {7, 0});
    CHECK_THROWS_AS(surgery_remove(tg, 7.0, base.source), InvalidParameter);
}

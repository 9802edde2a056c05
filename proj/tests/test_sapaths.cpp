#include <doctest.h>

#include "pdlab/sapaths.hpp"
#include "pdlab/rng.hpp"

using namespace pdlab;

namespace {

DelaunayGraph triangle_graph() {
    DelaunayGraph g;
    g.adjacency = {{1, 2}, {0, 2}, {0, 1}};
    g.degree = {2, 2, 2};
    return g;
}

DelaunayGraph star_graph(int k) {
    DelaunayGraph g;
    g.adjacency.assign(std::size_t(k) + 1, {});
    for (int i = 1; i <= k; ++i) {
        g.adjacency[0].push_back(i);
        g.adjacency[std::size_t(i)].push_back(0);
    }
    g.degree.resize(std::size_t(k) + 1);
    for (std::size_t i = 0; i < g.adjacency.size(); ++i) g.degree[i] = int(g.adjacency[i].size());
    return g;
}

Triangulation random_delaunay(uint64_t seed) {
    const PointSet ps = sample_poisson(Window{0, 12, 0, 12, 0},
                                       {IntensityModel::Kind::Homogeneous, 0.5, 0, 1}, seed);
    return build_delaunay(ps);
}

} // namespace

TEST_CASE("base cases of the path count") {
    const auto g = triangle_graph();
    CHECK(count_sa_paths(g, 0, 0) == 1);
    CHECK(count_sa_paths(g, 0, 0, {0}) == 0);
    CHECK(count_sa_paths(g, 0, 2) == 2);
    // N_1(x, empty) = deg(x) on any graph.
    for (uint64_t seed = 0; seed < 4; ++seed) {
        const auto tri = random_delaunay(100 + seed);
        for (int v = 0; v < int(tri.num_vertices()); v += 7)
            CHECK(count_sa_paths(tri.graph, v, 1) == tri.graph.degree[std::size_t(v)]);
    }
}

TEST_CASE("count recursion: N_{n+1}(x, I) = sum over fresh neighbors of N_n") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const auto tri = random_delaunay(200 + seed);
        const int x = int(seed) % int(tri.num_vertices());
        for (int n = 0; n <= 4; ++n) {
            const long lhs = count_sa_paths(tri.graph, x, n + 1);
            long rhs = 0;
            for (int u : tri.graph.adjacency[std::size_t(x)])
                rhs += count_sa_paths(tri.graph, u, n, {x});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("degree product bound: star, triangle, random instances") {
    const auto star = star_graph(7);
    const auto s = degree_product_bound_check(star, 0, 1);
    CHECK(s.count == 7);
    CHECK(s.bound == doctest::Approx(7.0));
    CHECK(s.ok);

    const auto k3 = degree_product_bound_check(triangle_graph(), 0, 2);
    CHECK(k3.count == 2);
    CHECK(k3.bound == doctest::Approx(4.0));
    CHECK(k3.ok);

    for (uint64_t seed = 0; seed < 20; ++seed) {
        const auto tri = random_delaunay(300 + seed);
        const int start = int(seed * 3) % int(tri.num_vertices());
        for (int r = 1; r <= 5; ++r) {
            const auto chk = degree_product_bound_check(tri.graph, start, r);
            CHECK(chk.ok);
        }
    }
}

TEST_CASE("covering extremes basics") {
    const auto tri = random_delaunay(42);
    const int start = locate(*tri.points, {6, 6});
    const auto r0 = covering_extremes(tri, start, 0, 1.0);
    CHECK(r0.g_min == 1);
    CHECK(r0.g_max == 1);
    for (int r : {2, 3}) {
        const auto res = covering_extremes(tri, start, r, 1.0);
        CHECK(res.g_max >= res.g_min);
        CHECK(res.g_min >= 1);
    }
    // Larger boxes can only shrink the animal count.
    const auto fine = covering_extremes(tri, start, 3, 0.5);
    const auto coarse = covering_extremes(tri, start, 3, 4.0);
    CHECK(coarse.g_max <= fine.g_max);
}

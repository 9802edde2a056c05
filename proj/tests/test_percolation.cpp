#include <doctest.h>

#include <set>

#include "pdlab/percolation.hpp"
#include "pdlab/rng.hpp"

using namespace pdlab;

namespace {

std::shared_ptr<const Triangulation> random_delaunay(uint64_t seed, double side = 12,
                                                     double lambda = 0.6) {
    const double h = side / 2;
    const PointSet ps = sample_poisson(Window{-h, h, -h, h, 1},
                                       {IntensityModel::Kind::Homogeneous, lambda, 0, 1}, seed);
    return std::make_shared<const Triangulation>(build_delaunay(ps));
}

std::shared_ptr<const Triangulation> tiny_delaunay(uint64_t seed) {
    for (uint64_t s = seed;; ++s) {
        const PointSet ps = sample_poisson(Window{-2, 2, -2, 2, 0},
                                           {IntensityModel::Kind::Homogeneous, 0.5, 0, 1}, s);
        if (ps.size() >= 4 && ps.size() <= 10) {
            try {
                return std::make_shared<const Triangulation>(build_delaunay(ps));
            } catch (const DegenerateInput&) {
            }
        }
    }
}

} // namespace

TEST_CASE("open cluster extremes: p=0 and p=1") {
    const auto tri = random_delaunay(5);
    const auto none = open_cluster(make_bond_field(tri, 0.0, 1));
    CHECK(none.size() == 1);
    CHECK(none[0] == locate(*tri->points, {0, 0}));
    const auto all = open_cluster(make_bond_field(tri, 1.0, 1));
    CHECK(all.size() == tri->num_vertices());
}

TEST_CASE("open cluster equals a reachability oracle on small graphs") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        const auto tri = tiny_delaunay(100 + seed * 11);
        const BondField bf = make_bond_field(tri, 0.5, seed);
        const auto cluster = open_cluster(bf);
        // Oracle: adjacency-matrix closure over open edges.
        const int root = locate(*tri->points, {0, 0});
        std::set<int> reach{root};
        bool grew = true;
        while (grew) {
            grew = false;
            for (int u : reach) {
                for (int v : tri->graph.adjacency[std::size_t(u)]) {
                    if (!bf.open(u, v) || reach.count(v)) continue;
                    reach.insert(v);
                    grew = true;
                    break;
                }
                if (grew) break;
            }
        }
        CHECK(cluster == std::vector<int>(reach.begin(), reach.end()));
    }
}

TEST_CASE("good box: all-open field passes when the niceness holds") {
    // Crafted points: one per nice sub-box of every box in the 5x5
    // neighborhood, so condition (i) holds by construction.
    const double L = 6.0;
    const double r = L / 2;
    const int alpha = alpha_d(2);
    Rng rng(123);
    PointSet ps;
    ps.window = {-9, 9, -9, 9, 0};
    const BoxGrid grid{r, 1};
    for (int zy = -2; zy <= 2; ++zy)
        for (int zx = -2; zx <= 2; ++zx) {
            const Rect b = grid.box_rect({zx, zy});
            for (int i = 0; i < alpha; ++i)
                for (int j = 0; j < alpha; ++j)
                    ps.points.push_back({b.x0 + (i + rng.uniform(0.2, 0.8)) * r / alpha,
                                         b.y0 + (j + rng.uniform(0.2, 0.8)) * r / alpha});
        }
    auto tri = std::make_shared<const Triangulation>(build_delaunay(ps));
    REQUIRE(classify_box(ps, grid, {0, 0}, BoxMode::Nice));
    const BondField all_open = make_bond_field(tri, 1.0, 7);
    CHECK(good_box_Y(all_open, L, {0, 0}));
    // All edges closed: some closed path certainly crosses; Y fails.
    const BondField all_closed = make_bond_field(tri, 0.0, 7);
    CHECK_FALSE(good_box_Y(all_closed, L, {0, 0}));
}

TEST_CASE("good box fails when the neighborhood is empty") {
    // Too sparse for niceness at this scale.
    const PointSet ps = sample_poisson(Window{-40, 40, -40, 40, 0},
                                       {IntensityModel::Kind::Homogeneous, 0.02, 0, 1}, 5);
    if (ps.size() >= 3) {
        auto tri = std::make_shared<const Triangulation>(build_delaunay(ps));
        CHECK_FALSE(good_box_Y(make_bond_field(tri, 1.0, 1), 8.0, {0, 0}));
    }
}

TEST_CASE("good box locality: restriction to the 5L/2 box gives the same answer") {
    // Crafted nice neighborhood plus Poisson noise; closed edges are sparse
    // enough that both Y outcomes occur across seeds.
    const double L = 6.0;
    const double r = L / 2;
    const int alpha = alpha_d(2);
    const BoxGrid grid{r, 1};
    int ones = 0, zeros = 0;
    for (uint64_t seed = 0; seed < 6; ++seed) {
        Rng rng(900 + seed);
        PointSet ps = sample_poisson(Window{-12, 12, -12, 12, 0},
                                     {IntensityModel::Kind::Homogeneous, 1.0, 0, 1}, 40 + seed);
        // A crafted nice neighborhood for half the seeds; noise only (Y = 0
        // through a failed condition (i)) for the rest.
        if (seed % 2 == 0) {
            for (int zy = -2; zy <= 2; ++zy)
                for (int zx = -2; zx <= 2; ++zx) {
                    const Rect b = grid.box_rect({zx, zy});
                    for (int i = 0; i < alpha; ++i)
                        for (int j = 0; j < alpha; ++j)
                            ps.points.push_back({b.x0 + (i + rng.uniform(0.2, 0.8)) * r / alpha,
                                                 b.y0 + (j + rng.uniform(0.2, 0.8)) * r / alpha});
                }
        }
        auto tri = std::make_shared<const Triangulation>(build_delaunay(ps));
        const BondField bf = make_bond_field(tri, 0.9, seed);

        PointSet local;
        local.window = ps.window;
        local.seed = ps.seed;
        const double r54 = 5.0 * L / 4.0; // half-side of the 5L/2 box
        for (const Vec2& p : ps.points)
            if (std::fabs(p.x) <= r54 && std::fabs(p.y) <= r54) local.points.push_back(p);
        auto ltri = std::make_shared<const Triangulation>(build_delaunay(local));
        const BondField lbf = make_bond_field(ltri, 0.9, seed); // same seed: same edge marks

        const bool full = good_box_Y(bf, L, {0, 0});
        CHECK(full == good_box_Y(lbf, L, {0, 0}));
        (full ? ones : zeros) += 1;
    }
    CHECK(ones >= 1);
    CHECK(zeros >= 1); // both outcomes are exercised
}

TEST_CASE("sparse open paths: trivial and impossible regimes") {
    const auto tri = random_delaunay(9, 14, 0.8);
    // a >= 1: every m-edge path qualifies.
    CHECK(sparse_open_path_exists(make_bond_field(tri, 0.5, 1), 3, 1.0));
    // p = 1 with a < 1/m: every edge open, no sparse path.
    CHECK_FALSE(sparse_open_path_exists(make_bond_field(tri, 1.0, 1), 3, 0.2));
    // p = 0: the zero-open path always exists.
    CHECK(sparse_open_path_exists(make_bond_field(tri, 0.0, 1), 3, 0.0));
}

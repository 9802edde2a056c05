#include <doctest.h>

#include <cmath>

#include "pdlab/reimer.hpp"

using namespace pdlab;

TEST_CASE("lattice clusters: Linf adjacency and sizes") {
    LatticeField f{3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}};
    const auto cl = lattice_clusters(f);
    REQUIRE(cl.sizes.size() == 1); // diagonal is one Linf cluster
    CHECK(cl.sizes[0] == 3);
    LatticeField g{3, 1, {1, 0, 1}};
    CHECK(lattice_clusters(g).sizes.size() == 2);
}

TEST_CASE("p=0: both sides are exactly 1") {
    const auto probe =
        reimer_probe(6, 6, 0.0, WeightFn{WeightFn::Kind::Identity, 1}, {{1, 1}, {3, 3}}, 200, 1);
    CHECK(probe.lhs == 1.0);
    CHECK(probe.lhs_se == 0.0);
    CHECK(probe.rhs == 1.0);
}

TEST_CASE("p=1 on a 3x3 Lambda in a 9x9 grid") {
    // All sites bad: one cluster of 81; lhs = f(81), rhs = f(81)^9.
    std::vector<GridSite> lambda;
    for (int y = 3; y < 6; ++y)
        for (int x = 3; x < 6; ++x) lambda.push_back({x, y});
    const WeightFn f{WeightFn::Kind::Identity, 1};
    const auto probe = reimer_probe(9, 9, 1.0, f, lambda, 50, 2);
    CHECK(probe.lhs == doctest::Approx(81.0));
    CHECK(probe.rhs == doctest::Approx(std::pow(81.0, 9)));
    CHECK(probe.lhs <= probe.rhs);
}

TEST_CASE("Monte Carlo agrees with exact enumeration on 4x4 grids") {
    const WeightFn f{WeightFn::Kind::Identity, 1};
    for (double p : {0.2, 0.5}) {
        const std::vector<GridSite> lambda{{0, 0}, {2, 1}, {3, 3}};
        const auto probe = reimer_probe(4, 4, p, f, lambda, 60000, 7);
        REQUIRE(probe.exact_available);
        CHECK(std::fabs(probe.lhs - probe.exact_lhs) <= 3 * probe.lhs_se + 1e-12);
        CHECK(std::fabs(probe.rhs - probe.exact_rhs) <= 3 * probe.rhs_se + 1e-9);
        // The inequality itself, exactly.
        CHECK(probe.exact_lhs <= probe.exact_rhs + 1e-12);
    }
}

TEST_CASE("inequality holds within noise across parameters") {
    const WeightFn f{WeightFn::Kind::Identity, 1};
    for (double p : {0.1, 0.3, 0.6}) {
        const std::vector<GridSite> lambda{{2, 2}, {4, 4}, {6, 2}, {4, 6}};
        const auto probe = reimer_probe(9, 9, p, f, lambda, 30000, 11);
        CHECK(probe.lhs <= probe.rhs + 3 * std::sqrt(probe.lhs_se * probe.lhs_se +
                                                     probe.rhs_se * probe.rhs_se));
    }
}

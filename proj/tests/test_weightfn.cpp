#include <doctest.h>

#include <cmath>

#include "pdlab/rng.hpp"
#include "pdlab/weightfn.hpp"

using namespace pdlab;

TEST_CASE("pseudo_inverse on closed-form anchors") {
    // g(x)=x^2, u=4: sup{x : x^2 < 4} = 2.
    auto sq = [](double x) { return x * x; };
    CHECK(pseudo_inverse(sq, 4.0, 0.0, 10.0).value == doctest::Approx(2.0).epsilon(1e-9));
    // Identity, u=7.
    auto id = [](double x) { return x; };
    CHECK(pseudo_inverse(id, 7.0, 0.0, 100.0).value == doctest::Approx(7.0).epsilon(1e-9));
    // Jump function g(x)=floor(x), u=1: sup{x : floor(x) < 1} = 1.
    auto fl = [](double x) { return std::floor(x); };
    CHECK(pseudo_inverse(fl, 1.0, 0.0, 10.0).value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("pseudo_inverse clamping and bracket errors") {
    auto id = [](double x) { return x; };
    const auto clamped = pseudo_inverse(id, -5.0, 0.0, 10.0);
    CHECK(clamped.clamped);
    CHECK(clamped.value == 0.0);
    CHECK_THROWS_AS(pseudo_inverse(id, 100.0, 0.0, 10.0), BracketTooSmall);
}

TEST_CASE("pseudo_inverse inverts g on strictly increasing presets") {
    Rng rng(4);
    NiceCalc idc(WeightFn{WeightFn::Kind::Identity, 1});
    NiceCalc sqc(WeightFn{WeightFn::Kind::Square, 1});
    NiceCalc logc(WeightFn{WeightFn::Kind::Logarithmic, 1});
    for (int i = 0; i < 100; ++i) {
        const double x = 1.0 + rng.uniform(0, 50);
        CHECK(idc.l(idc.g(x)) == doctest::Approx(x).epsilon(1e-8));
        CHECK(sqc.l(sqc.g(x)) == doctest::Approx(x).epsilon(1e-8));
        CHECK(logc.l(logc.g(x)) == doctest::Approx(x).epsilon(1e-8));
    }
}

TEST_CASE("identity rate equals u^(1/3) to 1e-6 relative") {
    std::vector<double> grid;
    for (double u = 10.0; u <= 1e7; u *= 3.1623) grid.push_back(u);
    const auto rows = nice_exponent_probe(WeightFn{WeightFn::Kind::Identity, 1}, grid);
    for (const auto& row : rows) {
        const double expect = std::cbrt(row.u);
        CHECK(std::fabs(row.rate - expect) / expect < 1e-6);
    }
    // Anchor value: u = 1e6 -> 100.
    const auto one = nice_exponent_probe(WeightFn{WeightFn::Kind::Identity, 1}, {1e6});
    CHECK(one[0].rate == doctest::Approx(100.0).epsilon(1e-6));
}

TEST_CASE("constant weight: l(q(16)) = 4") {
    NiceCalc c1(WeightFn{WeightFn::Kind::Constant, 1.0});
    CHECK(c1.rate(16.0) == doctest::Approx(4.0).epsilon(1e-7));
}

TEST_CASE("square weight rate is u^(1/4)") {
    NiceCalc sq(WeightFn{WeightFn::Kind::Square, 1});
    CHECK(sq.rate(1e4) == doctest::Approx(10.0).epsilon(1e-6));
    CHECK(sq.rate(81.0 * 256.0) == doctest::Approx(12.0).epsilon(1e-6));
}

TEST_CASE("weight presets are nondecreasing and >= 1 on degrees") {
    for (const WeightFn f : {WeightFn{WeightFn::Kind::Identity, 1}, WeightFn{WeightFn::Kind::Square, 1},
                             WeightFn{WeightFn::Kind::Logarithmic, 1},
                             WeightFn{WeightFn::Kind::Constant, 2.5}}) {
        double prev = 0;
        for (int k = 1; k <= 40; ++k) {
            const double v = f(double(k));
            CHECK(v >= 1.0);
            CHECK(v >= prev);
            prev = v;
        }
    }
    const WeightFn bad{WeightFn::Kind::Constant, 0.5};
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}

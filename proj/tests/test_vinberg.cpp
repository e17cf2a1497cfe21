#include <doctest.h>

#include "oracles.hpp"
#include "rtlink/vinberg.hpp"

using namespace rtlink;

TEST_CASE("Niven: cos(2 pi / p) is rational exactly for p in {1,2,3,4,6}") {
    for (int p = 3; p <= 60; ++p) {
        CAPTURE(p);
        CHECK(niven_filter(p) == (p == 3 || p == 4 || p == 6));
    }
}

TEST_CASE("arithmetic certificates of (6,4) and (6,6)") {
    auto c64 = check_arithmetic(build_hyperbolic_presentation(6, 4));
    CHECK(c64.arithmetic);
    CHECK_FALSE(c64.failing_item);
    REQUIRE(c64.cycles.back().rational);
    CHECK(*c64.cycles.back().rational == 96);
    auto c66 = check_arithmetic(build_hyperbolic_presentation(6, 6));
    CHECK(c66.arithmetic);
    CHECK(*c66.cycles.back().rational == 72);
    for (const auto& e : c66.entries)
        CHECK(e.integral);
}

TEST_CASE("hexagonal cycle equals the hand-multiplied product") {
    // (6,4): sqrt3 * 2 * 2sqrt3 * 2sqrt2 * 2 * sqrt2 = 96 and the 2-cycles
    // are the squares 3, 2, 4, 4, 12, 8.
    auto c = check_arithmetic(build_hyperbolic_presentation(6, 4));
    std::vector<Rational> squares = {3, 2, 4, 4, 12, 8};
    Rational all = 1;
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(*c.cycles[k].rational == squares[k]);
        all *= *c.cycles[k].rational;
    }
    // Each edge occurs once in the hexagon, so its square is the product of
    // the 2-cycles.
    CHECK(all == *c.cycles[6].rational * *c.cycles[6].rational);
}

TEST_CASE("non-arithmetic witnesses") {
    auto c = check_arithmetic(build_hyperbolic_presentation(7, 3));
    CHECK_FALSE(c.arithmetic);
    REQUIRE(c.failing_item);
    CHECK(c.failing_item->kind == FailingItem::Kind::Cycle);
    CHECK(reproduces_failure(build_hyperbolic_presentation(7, 3), c));

    auto sph = build_spherical_presentation(5, 3);
    auto s = check_arithmetic(sph);
    CHECK_FALSE(s.arithmetic);
    REQUIRE(s.failing_item);
    const auto& w = s.cycles[s.failing_item->index];
    CHECK(w.faces == std::vector<int>{0, 1});
    // 4cos^2(pi/5) = (3 + sqrt5)/2
    CHECK(w.value.approx() == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-14));
    CHECK_FALSE(w.rational);
    CHECK(reproduces_failure(sph, s));
}

TEST_CASE("sweep verdicts match full certificates up to 12") {
    for (const auto& row : arithmetic_sweep(12, 12)) {
        CAPTURE(row.m);
        CAPTURE(row.n);
        auto p = build_hyperbolic_presentation(row.m, row.n);
        CHECK(check_arithmetic(p).arithmetic == row.arithmetic);
    }
}

#include <doctest.h>

#include "oracles.hpp"
#include "rtlink/coxeter.hpp"
#include "rtlink/errors.hpp"

using namespace rtlink;

TEST_CASE("normalize orders the pair and rejects small polygons") {
    auto t = normalize(4, 6);
    CHECK(t.m == 6);
    CHECK(t.n == 4);
    CHECK(t.geometry == Geometry::Hyperbolic);
    CHECK(normalize(4, 4).geometry == Geometry::Euclidean);
    CHECK(normalize(3, 6).geometry == Geometry::Euclidean);
    CHECK(normalize(3, 5).geometry == Geometry::Spherical);
    CHECK_THROWS_AS(normalize(2, 7), DomainError);
    CHECK_THROWS_AS(build_hyperbolic_presentation(4, 4), GeometryError);
    CHECK_THROWS_AS(build_spherical_presentation(7, 3), GeometryError);
}

TEST_CASE("Gram matrix of P(6,4) entry by entry") {
    auto p = build_hyperbolic_presentation(6, 4);
    auto c = p.ctx;
    auto q = [&](long v) { return AlgebraicNumber::rational(c, v); };
    auto s3 = oracle::sqrt_of(c, 3), s2 = oracle::sqrt_of(c, 2), z = q(0);
    ExactMatrix want = {{q(2), -s3, -s2, z, z, z},
                        {-s3, q(2), z, q(-2), z, z},
                        {-s2, z, q(2), z, q(-2), z},
                        {z, q(-2), z, q(2), z, s3 * Rational(-2)},
                        {z, z, q(-2), z, q(2), s2 * Rational(-2)},
                        {z, z, z, s3 * Rational(-2), s2 * Rational(-2), q(2)}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(oracle::same_value(p.gram[i][j], want[i][j]));
        }
}

TEST_CASE("ultraparallel entries match the closed form numerically and exactly") {
    for (int m = 3; m <= 12; ++m)
        for (int n = 3; n <= 12; ++n) {
            if (!oracle::hyperbolic(m, n))
                continue;
            CAPTURE(m);
            CAPTURE(n);
            auto p = build_hyperbolic_presentation(m, n);
            long double cm = std::cos(std::numbers::pi_v<long double> / p.m);
            long double cn = std::cos(std::numbers::pi_v<long double> / p.n);
            long double root = std::sqrt(cm * cm + cn * cn - 1);
            CHECK(p.gram[3][5].approx() == doctest::Approx(double(-2 * cm / root)).epsilon(1e-12));
            CHECK(p.gram[4][5].approx() == doctest::Approx(double(-2 * cn / root)).epsilon(1e-12));
            auto sol = solve_ultraparallel_by_minor(p.m, p.n);
            CHECK(oracle::same_value(sol.c_mn * Rational(-2), p.gram[3][5]));
            CHECK(oracle::same_value(sol.c_nm * Rational(-2), p.gram[4][5]));
        }
}

TEST_CASE("every hyperbolic Gram matrix has rank 4 and signature (3,1)") {
    for (int m = 3; m <= 12; ++m)
        for (int n = 3; n <= m; ++n) {
            if (!oracle::hyperbolic(m, n))
                continue;
            auto s = rank_and_signature(build_hyperbolic_presentation(m, n));
            CAPTURE(m);
            CAPTURE(n);
            CHECK(s.rank == 4);
            CHECK(s.positive == 3);
            CHECK(s.negative == 1);
        }
}

TEST_CASE("spherical polyhedra: (5,3) has five faces and signature (3,1)") {
    for (auto [m, n] : {std::pair{5, 3}, {4, 3}, {3, 3}}) {
        auto p = build_spherical_presentation(m, n);
        CHECK(p.gram.size() == 5);
        auto s = rank_and_signature(p);
        CHECK(s.rank == 4);
        CHECK(s.positive == 3);
        CHECK(s.negative == 1);
    }
}

TEST_CASE("cyclic products of P(m,n)") {
    auto p = build_hyperbolic_presentation(7, 5);
    auto cycles = enumerate_cyclic_products(p);
    // Six diagram edges, one hexagonal cycle.
    REQUIRE(cycles.size() == 7);
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(cycles[k].faces.size() == 2);
    CHECK(cycles[6].faces == std::vector<int>{0, 1, 3, 5, 4, 2});
    double prod = 1;
    const auto& f = cycles[6].faces;
    for (std::size_t k = 0; k < f.size(); ++k)
        prod *= p.gram[f[k]][f[(k + 1) % f.size()]].approx();
    CHECK(cycles[6].value.approx() == doctest::Approx(prod).epsilon(1e-12));
}

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rtlink/classifier.hpp"
#include "rtlink/errors.hpp"

using namespace rtlink;

TEST_CASE("Euler characteristic count") {
    // [4,4,4,4] on the torus: any vertex count, no forced value.
    auto t = classify_geometry(4, 4, 1);
    CHECK(t.type.geometry == Geometry::Euclidean);
    CHECK(t.tiling_exists);
    // Sphere: [3,4,3,4] is the cuboctahedron with 12 vertices.
    auto s = classify_geometry(4, 3, 0);
    REQUIRE(s.vertex_count);
    CHECK(*s.vertex_count == 12);
    // [5,3,5,3] is the icosidodecahedron, 30 vertices.
    CHECK(*classify_geometry(5, 3, 0).vertex_count == 30);
    // Genus 2 with [7,3,7,3]: V (2/7 + 2/3 - 1) = -2 gives V = 42, so 12 heptagons.
    auto h = classify_geometry(7, 3, 2);
    CHECK(*h.vertex_count == 42);
    CHECK(h.tiling_exists);
    // Hyperbolic tilings cannot live on the sphere.
    CHECK_FALSE(classify_geometry(7, 3, 0).tiling_exists);
    CHECK_THROWS_AS(classify_geometry(2, 3), DomainError);
}

TEST_CASE("arithmetic types are exactly the six of the classification") {
    std::set<std::pair<int, int>> got;
    for (const auto& t : valid_types(30))
        if (arithmetic_status(t.m, t.n).arithmetic)
            got.insert({t.m, t.n});
    std::set<std::pair<int, int>> want = {{3, 3}, {4, 3}, {4, 4}, {6, 3}, {6, 4}, {6, 6}};
    CHECK(got == want);
    CHECK(arithmetic_status(6, 4).source == Source::Computed);
    CHECK(arithmetic_status(4, 4).source == Source::PaperLookup);
}

TEST_CASE("trace field table") {
    CHECK(*trace_field_table(6, 4).d == -6);
    CHECK(*trace_field_table(6, 6).d == -1);
    CHECK(*trace_field_table(3, 3).d == -1);
    CHECK(*trace_field_table(4, 3).d == -2);
    CHECK(*trace_field_table(6, 3).d == -3);
    CHECK(trace_field_table(6, 4).source == Source::Computed);
    CHECK_FALSE(trace_field_table(7, 3, false).d);
}

TEST_CASE("commensurability") {
    auto types = valid_types(12);
    std::set<std::pair<int, int>> qi = {{3, 3}, {4, 4}, {6, 6}};
    for (const auto& a : types)
        for (const auto& b : types) {
            bool expect = (a.m == b.m && a.n == b.n) || (qi.count({a.m, a.n}) && qi.count({b.m, b.n}));
            auto v = commensurable(a, b);
            CAPTURE(a.m);
            CAPTURE(a.n);
            CAPTURE(b.m);
            CAPTURE(b.n);
            CHECK(v.commensurable == expect);
            CHECK(commensurable(b, a).commensurable == v.commensurable);
        }
    CHECK(commensurable(normalize(6, 4), normalize(4, 3)).clause.find("trace fields differ") != std::string::npos);
    CHECK(commensurable(normalize(7, 3), normalize(5, 4)).clause.find("canonical cells differ") != std::string::npos);
}

TEST_CASE("minimal orbifold degree") {
    CHECK(*minimal_orbifold_degree(7, 3) == 1);
    CHECK(*minimal_orbifold_degree(5, 5) == 2);
    CHECK_FALSE(minimal_orbifold_degree(6, 6));
    CHECK_FALSE(minimal_orbifold_degree(4, 6));
    CHECK_THROWS_AS(minimal_orbifold_degree(4, 4), GeometryError);
}

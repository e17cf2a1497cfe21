#include <doctest.h>

#include "oracles.hpp"
#include "rtlink/cells.hpp"
#include "rtlink/coxeter.hpp"
#include "rtlink/lorentz.hpp"

using namespace rtlink;

namespace {

const Mat4 J = Vec4(1, 1, 1, -1).asDiagonal();

double label_angle(const EdgeLabel& l) { return std::numbers::pi / l.k; }

}   // namespace

TEST_CASE("random Lorentz transforms are isometries") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Mat4 t = random_lorentz_transform(seed);
        CHECK((t.transpose() * J * t - J).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(t(3, 3) > 0);
    }
}

TEST_CASE("vertex classification") {
    CHECK(classify(Vec4(0, 0, 0, 1)) == VertexKind::Finite);
    CHECK(classify(Vec4(1, 0, 0, 1)) == VertexKind::Ideal);
    CHECK(classify(Vec4(2, 0, 0, 1)) == VertexKind::UltraIdeal);
    CHECK(classify(Vec4(0, 0, 0, 5)) == VertexKind::Finite);
}

TEST_CASE("realized normals reproduce the diagram labels") {
    for (int m = 3; m <= 12; ++m)
        for (int n = 3; n <= m; ++n) {
            if (!oracle::hyperbolic(m, n))
                continue;
            auto p = build_hyperbolic_presentation(m, n);
            auto r = realize(p);
            for (const auto& e : p.edges)
                if (e.label.kind == EdgeLabel::Kind::Angle)
                    CHECK(std::abs(dihedral_angle(r.normals[e.i], r.normals[e.j]) - label_angle(e.label)) < 1e-9);
            // Unlisted pairs are perpendicular.
            CHECK(std::abs(inner(r.normals[0], r.normals[5])) < 1e-9);
            CHECK(std::abs(inner(r.normals[1], r.normals[2])) < 1e-9);
        }
}

TEST_CASE("angles are invariant under Lorentz transformations") {
    auto r = realize(build_hyperbolic_presentation(7, 4));
    Mat4 t = random_lorentz_transform(3);
    for (std::size_t i = 0; i < r.normals.size(); ++i)
        for (std::size_t j = 0; j < r.normals.size(); ++j)
            CHECK(inner(t * r.normals[i], t * r.normals[j]) ==
                  doctest::Approx(inner(r.normals[i], r.normals[j])).epsilon(1e-9));
}

TEST_CASE("P(6,4) has one cusp and six finite vertices") {
    auto r = realize(build_hyperbolic_presentation(6, 4));
    int finite = 0, ideal = 0;
    for (const auto& v : r.vertices) {
        finite += v.kind == VertexKind::Finite;
        ideal += v.kind == VertexKind::Ideal;
        if (v.kind == VertexKind::Ideal)
            CHECK(v.faces == std::vector<int>{1, 2, 3, 4});
    }
    CHECK(finite == 6);
    CHECK(ideal == 1);
}

TEST_CASE("horoball distance along a geodesic") {
    // Walk from x toward the centre of the horoball by the claimed distance
    // and check that the endpoint is on the horosphere <y, w> = -1.
    Vec4 w(0.6, 0.0, 0.8, 1.0);
    w *= 3.0;
    for (Vec4 x : {Vec4(0, 0, 0, 1), Vec4(std::sinh(1.2), 0, 0, std::cosh(1.2)), Vec4(0.3, -0.4, 0.1, 0)}) {
        x[3] = std::sqrt(1 + x.head<3>().squaredNorm());
        double d = distance_to_horoball(x, w);
        Vec4 u = w + inner(x, w) * x;
        u /= std::sqrt(inner(u, u));
        Vec4 y = std::cosh(d) * x + std::sinh(d) * u;
        CHECK(inner(y, w) == doctest::Approx(-1).epsilon(1e-12));
    }
    // Two horoballs tangent at the origin: centres +-e1, each at distance 0.
    Vec4 a(1, 0, 0, 1), b(-1, 0, 0, 1);
    CHECK(horoball_distance(a, b) == doctest::Approx(0).epsilon(1e-15));
    CHECK(horoball_distance(2 * a, 2 * b) == doctest::Approx(std::log(4.0)));
}

TEST_CASE("tiling angles against the polygon construction") {
    for (int m = 3; m <= 12; ++m)
        for (int n = 3; n <= 12; ++n) {
            if (!oracle::hyperbolic(m, n))
                continue;
            auto a = tiling_angles(m, n);
            CHECK(std::abs(a.alpha_m - oracle::polygon_angle(m, n)) < 1e-12);
            CHECK(std::abs(a.alpha_m + a.alpha_n - std::numbers::pi) < 1e-15);
        }
    CHECK(tiling_angles(6, 6).alpha_m == std::numbers::pi / 2);
}

TEST_CASE("ideal platonic cells") {
    auto tet = build_platonic_cell(PlatonicKind::Tetrahedron);
    auto oct = build_platonic_cell(PlatonicKind::Octahedron);
    CHECK(tet.vertices.size() == 4);
    CHECK(oct.vertices.size() == 6);
    CHECK(tet.symmetries.size() == 24);
    CHECK(oct.symmetries.size() == 48);
    CHECK(midpoint_tangency_error(tet) < 1e-9);
    CHECK(midpoint_tangency_error(oct) < 1e-9);
    CHECK(dihedral(tet, 0, 1) == doctest::Approx(std::numbers::pi / 3));
    CHECK(mirror_normals(tet).size() == 6);
    CHECK(mirror_normals(oct).size() == 9);
    CHECK(symmetry_error(oct) < 1e-9);
}

TEST_CASE("drums: dihedral angles, symmetry, and basins") {
    auto d = build_drum(6, 4, 4);
    CHECK(d.cell.vertices.size() == 8);
    CHECK(d.cell.symmetries.size() == 16);
    auto ang = tiling_angles(6, 4);
    CHECK(d.base_lateral == doctest::Approx(ang.alpha_m / 2).epsilon(1e-12));
    CHECK(d.lateral_lateral == doctest::Approx(ang.alpha_n).epsilon(1e-12));
    CHECK(symmetry_error(d.cell) < 1e-9);
    auto rep = verify_basins(d.cell, 2000, 5);
    CHECK(rep.tested == 2000);
    CHECK(rep.violations == 0);
    // Same seed, same report.
    auto again = verify_basins(d.cell, 2000, 5);
    CHECK(again.max_margin_at_walls == rep.max_margin_at_walls);
    CHECK(again.skipped == rep.skipped);
}

TEST_CASE("gluing angle sums close up to 2 pi") {
    for (auto [m, n] : {std::pair{6, 4}, {7, 3}, {5, 5}, {12, 11}}) {
        auto g = verify_gluing_angles(m, n);
        CHECK(g.ok);
        CHECK(std::abs(g.base_lateral_sum - 2 * std::numbers::pi) < 1e-9);
        CHECK(std::abs(g.lateral_lateral_sum - 2 * std::numbers::pi) < 1e-9);
    }
}

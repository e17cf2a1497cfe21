#ifndef RTLINK_CELLS_HPP
#define RTLINK_CELLS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rtlink/lorentz.hpp"

namespace rtlink {

struct TilingAngles {
    double alpha_m = 0;   // interior angle of the m-gons
    double alpha_n = 0;
};

/// Interior angles of the two regular polygons of an [m,n,m,n] tiling with a
/// common edge length: tan(alpha_m / 2) = cos(pi/m) / cos(pi/n), and
/// alpha_m + alpha_n = pi.
TilingAngles tiling_angles(int m, int n);

/// An ideal polyhedron in the hyperboloid model. Vertices are stored with
/// x4 = 1, so their Klein-model coordinates are the first three entries.
struct Cell {
    std::string kind;
    std::vector<Vec4> vertices;
    std::vector<std::vector<int>> faces;
    std::vector<Vec4> normals;     // outward unit normals, interior <x, n> < 0
    std::vector<Vec4> horoballs;   // horosphere {x : <x, w> = -1}
    std::vector<Mat4> symmetries;  // the full symmetry group
};

struct DrumGeometry {
    int n = 0;       // base polygon size
    int other = 0;   // size of the other polygon of the tiling
    TilingAngles angles;
    double base_lateral = 0;      // measured from the normals
    double lateral_lateral = 0;
    double radius = 0;            // Klein-model circumradius of the bases
    double height = 0;            // bases at x3 = +-height
    Cell cell;
};

/// The regular ideal drum over the `side`-gons of the (m,n) tiling (side is m
/// or n). A k-drum whose neighbouring polygons are k'-gons has base-lateral
/// dihedral alpha_{k'}/2 and lateral-lateral dihedral alpha_k; the vertex
/// link then closes up, alpha_{k'}/2 + alpha_{k'}/2 + alpha_k = pi.
DrumGeometry build_drum(int m, int n, int side);

enum class PlatonicKind { Tetrahedron, Octahedron };

/// Regular ideal tetrahedron or octahedron with horoballs tangent at the
/// midpoints of the edges.
Cell build_platonic_cell(PlatonicKind kind);

/// Interior dihedral angle along the edge shared by faces a and b.
double dihedral(const Cell& cell, int a, int b);

/// d(x, H_w) = log(-<x, w>) for a point x on the hyperboloid.
double distance_to_horoball(const Vec4& x, const Vec4& w);
/// Signed distance between two horoballs, log(-<w1, w2> / 2).
double horoball_distance(const Vec4& w1, const Vec4& w2);

/// Foot of the perpendicular from ideal vertex k to the geodesic (i, j).
Vec4 edge_midpoint(const Vec4& vi, const Vec4& vj, const Vec4& vk);

/// Largest deviation from tangency at edge midpoints: over every edge and
/// every face containing it, the distances from the midpoint to both
/// endpoint horoballs (ideally 0).
double midpoint_tangency_error(const Cell& cell);

/// Largest error of any symmetry permuting vertices and horoballs.
double symmetry_error(const Cell& cell);

/// Unit normals of the mirror planes: group elements that are reflections.
std::vector<Vec4> mirror_normals(const Cell& cell);

struct CanonicalCheckReport {
    std::string cell;
    int samples = 0;      // interior points to test
    int tested = 0;
    int violations = 0;
    int skipped = 0;      // drawn within 1e-8 of a mirror, not counted
    double max_margin_at_walls = 0;
    int wall_crossings = 0;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
};

/// Sobol points in the Klein ball (sequence skipped ahead by the seed) are assigned
/// the nearest horoball and compared with the basin predicted by the mirror
/// planes: the basin of v is the region on v's side of every mirror not
/// through v.
CanonicalCheckReport verify_basins(const Cell& cell, int samples, std::uint64_t seed);

struct GluingReport {
    double base_lateral_sum = 0;      // 4 n-drums and 4 m-drums
    double lateral_lateral_sum = 0;   // 2 n-drums and 2 m-drums
    bool ok = false;
};

/// Angle sums around the two edge classes of the drum decomposition,
/// measured from the constructed drums.
GluingReport verify_gluing_angles(int m, int n);

}   // namespace rtlink

#endif

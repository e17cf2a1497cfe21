#ifndef RTLINK_LORENTZ_HPP
#define RTLINK_LORENTZ_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rtlink/coxeter.hpp"

namespace rtlink {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// <x,y> = x1 y1 + x2 y2 + x3 y3 - x4 y4
inline double inner(const Vec4& x, const Vec4& y) { return x.head<3>().dot(y.head<3>()) - x[3] * y[3]; }
inline double lorentz_q(const Vec4& x) { return inner(x, x); }

enum class VertexKind { Finite, Ideal, UltraIdeal };
const char* to_string(VertexKind k);

/// Scale-free classification: x is first scaled to unit Euclidean length.
VertexKind classify(const Vec4& x, double tol = 1e-9);

struct RealizedVertex {
    Vec4 x;   // finite: q = -1, ideal: x4 = 1, ultra-ideal: q = 1
    VertexKind kind = VertexKind::Finite;
    std::vector<int> faces;
    /// Ultra-ideal points only: the face orthogonal to all three planes,
    /// whose pole the point is. Such points lie beyond that face, so they are
    /// not vertices of the polyhedron itself.
    int truncated_by = -1;
};

struct PolyhedronRealization {
    /// Outward unit normals; the polyhedron is {x : <x, e_i> <= 0}.
    std::vector<Vec4> normals;
    /// Finite and ideal vertices, then the ultra-ideal points cut off by a
    /// face.
    std::vector<RealizedVertex> vertices;
};

/// Factors G/2 = N J N^T through its eigendecomposition (three positive, one
/// negative eigenvalue) and intersects face triples to find the vertices.
/// Throws GeometryError unless the numeric signature is (3,1).
PolyhedronRealization realize(const Eigen::MatrixXd& gram);
PolyhedronRealization realize(const CoxeterPresentation& p);

/// Interior dihedral angle between faces with outward unit normals a, b.
double dihedral_angle(const Vec4& a, const Vec4& b);

/// Lorentz-orthonormal frame from random vectors by Gram-Schmidt for the
/// indefinite form; columns 1-3 spacelike, column 4 future timelike.
Mat4 random_lorentz_transform(std::uint64_t seed);

}   // namespace rtlink

#endif

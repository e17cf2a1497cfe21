#ifndef RTLINK_COXETER_HPP
#define RTLINK_COXETER_HPP

#include <optional>
#include <string>
#include <vector>

#include "rtlink/exact_matrix.hpp"

namespace rtlink {

enum class Geometry { Spherical, Euclidean, Hyperbolic };

std::string to_string(Geometry g);

/// Sign of 1/m + 1/n - 1/2 decides the geometry of the [m,n,m,n] tiling.
Geometry geometry_of(int m, int n);

struct TilingType {
    int m = 0;
    int n = 0;
    Geometry geometry = Geometry::Hyperbolic;
};

/// Validates m, n >= 3 and orders the pair so that m >= n.
TilingType normalize(int m, int n);

struct EdgeLabel {
    enum class Kind { Angle, Parallel, Ultraparallel };
    Kind kind = Kind::Angle;
    int k = 0;                              // dihedral angle pi/k, Angle only
    std::optional<AlgebraicNumber> cosh;    // Ultraparallel only
};

struct DiagramEdge {
    int i = 0;   // 0-based face indices, i < j
    int j = 0;
    EdgeLabel label;
};

struct CoxeterPresentation {
    int m = 0;
    int n = 0;
    bool spherical = false;
    FieldPtr ctx;
    std::vector<std::string> faces;
    std::vector<DiagramEdge> edges;
    ExactMatrix gram;
};

/// The 6-face polyhedron P(m,n) covered by the link exterior of a hyperbolic
/// [m,n,m,n] tiling. Faces: F1 meets F2 at pi/m and F3 at pi/n, F2-F4 and
/// F3-F5 are parallel, F6 is the truncation face, ultraparallel to F4 and F5.
CoxeterPresentation build_hyperbolic_presentation(int m, int n);

/// The 5-face polyhedron of the spherical types, same diagram shape without
/// the truncation face. All unlisted pairs (including F4-F5) are right angles.
CoxeterPresentation build_spherical_presentation(int m, int n);

struct UltraparallelSolution {
    AlgebraicNumber c_mn;   // cosh l46
    AlgebraicNumber c_nm;   // cosh l56
};

/// Recovers cosh l46 and cosh l56 from the singularity of the 5x5 minors of
/// the Gram matrix, treating a46 and a56 as unknowns.
UltraparallelSolution solve_ultraparallel_by_minor(int m, int n);

/// cos^2(pi/m) + cos^2(pi/n) - 1 in Q(2cos(pi/L)).
AlgebraicNumber ultraparallel_radicand(const FieldPtr& ctx, int m, int n);

struct CyclicProduct {
    std::vector<int> faces;   // 0-based, cycle order
    AlgebraicNumber value;
};

/// All simple cycles of the diagram (2-cycles a_ij a_ji first, ordered by
/// (i,j); then longer cycles, each once, starting at the lowest face and
/// visiting the smaller of its two neighbours first).
std::vector<CyclicProduct> enumerate_cyclic_products(const CoxeterPresentation& p);

Signature rank_and_signature(const CoxeterPresentation& p);

}   // namespace rtlink

#endif

#ifndef RTLINK_TRACE_FIELD_HPP
#define RTLINK_TRACE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtlink/coxeter.hpp"

namespace rtlink {

enum class PathStrategy { BreadthFirst, DepthFirst, RandomTree };

struct TraceFieldWorksheet {
    /// paths[r]: faces from F1 to F_r (0-based, starts at 0).
    std::vector<std::vector<int>> paths;
    /// c[0] = a11 = 2; c[r] = product of the Gram entries along paths[r].
    std::vector<AlgebraicNumber> c;
    std::vector<int> basis;   // four 0-based face indices
    ExactMatrix gprime;       // c_i c_j a_ij on the basis
    AlgebraicNumber det;
};

/// Spanning tree of the diagram rooted at F1. Neighbours are visited in
/// increasing order, except for RandomTree, which shuffles them with seed.
TraceFieldWorksheet build_worksheet(const CoxeterPresentation& p, PathStrategy strategy = PathStrategy::BreadthFirst,
                                    std::uint64_t seed = 0);

AlgebraicNumber gprime_determinant(const TraceFieldWorksheet& w);

struct QuadraticField {
    Integer d;   // squarefree
    /// "Q(sqrt(-6))"
    std::string canonical() const;
    /// "Q(i*sqrt(6))", "Q(i)", "Q"
    std::string display() const;
    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;
};

/// Squarefree class of a nonzero rational: q = s^2 d.
QuadraticField quadratic_field_of(const Rational& q);

struct TraceFieldResult {
    bool kp_rational = false;
    /// Irrational cyclic products generating k(P), as face lists and values.
    std::vector<CyclicProduct> kp_generators;
    AlgebraicNumber det;
    std::optional<QuadraticField> field;
    /// field->canonical() when known, otherwise "k(P)(sqrt(det))" text.
    std::string description;
};

TraceFieldResult invariant_trace_field(const CoxeterPresentation& p,
                                       PathStrategy strategy = PathStrategy::BreadthFirst, std::uint64_t seed = 0);

}   // namespace rtlink

#endif

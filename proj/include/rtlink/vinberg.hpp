#ifndef RTLINK_VINBERG_HPP
#define RTLINK_VINBERG_HPP

#include <optional>
#include <string>
#include <vector>

#include "rtlink/coxeter.hpp"

namespace rtlink {

struct EntryWitness {
    int i = 0;   // 0-based, i <= j
    int j = 0;
    RatPoly minpoly;
    bool integral = false;
};

struct CycleWitness {
    std::vector<int> faces;   // 0-based
    AlgebraicNumber value;
    std::optional<Rational> rational;
};

struct FailingItem {
    enum class Kind { Entry, Cycle };
    Kind kind = Kind::Entry;
    std::size_t index = 0;   // into entries or cycles
};

struct ArithmeticityCertificate {
    int m = 0;
    int n = 0;
    bool arithmetic = false;
    std::vector<EntryWitness> entries;
    std::vector<CycleWitness> cycles;
    std::optional<FailingItem> failing_item;
};

/// Vinberg's criterion for non-compact Coxeter polyhedra: every Gram entry
/// is an algebraic integer and every cyclic product is rational. Entries
/// are checked first (upper triangle, row by row), then cycles in the order
/// of enumerate_cyclic_products; failing_item is the first failure.
ArithmeticityCertificate check_arithmetic(const CoxeterPresentation& p);

/// Re-evaluates the failing item of a certificate against p.
bool reproduces_failure(const CoxeterPresentation& p, const ArithmeticityCertificate& cert);

/// cos(2 pi / p) in Q, by the lookup {3,4,6} and by an exact rationality
/// test; the two must agree.
bool niven_filter(int p);

struct SweepRow {
    int m = 0;
    int n = 0;
    bool arithmetic = false;
    /// Human-readable witness, e.g. "cycle (1,2) = 4cos^2(pi/5) irrational".
    std::string witness;
    bool full_certificate = false;
};

/// Verdict for one hyperbolic pair. The 2-cycles a12 a21 = 4cos^2(pi/m) and
/// a13 a31 = 4cos^2(pi/n) are decided first in their own small fields; only
/// when both are rational is the full certificate built.
SweepRow arithmetic_verdict(int m, int n);

/// All hyperbolic (m, n) with 3 <= m <= m_max, 3 <= n <= n_max, row-major.
std::vector<SweepRow> arithmetic_sweep(int m_max, int n_max);

}   // namespace rtlink

#endif

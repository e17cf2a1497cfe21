#ifndef RTLINK_CLASSIFIER_HPP
#define RTLINK_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "rtlink/coxeter.hpp"

namespace rtlink {

struct GeometryVerdict {
    TilingType type;
    std::optional<int> genus;
    /// Forced vertex count when a genus is given and the Euler count is
    /// non-vacuous; empty for Euclidean types on the torus.
    std::optional<long> vertex_count;
    bool tiling_exists = true;
    std::string reason;
};

/// V (2/m + 2/n - 1) = 2 - 2g, plus integrality of the face counts 2V/m and
/// 2V/n.
GeometryVerdict classify_geometry(int m, int n, std::optional<int> genus = std::nullopt);

enum class Source { Computed, PaperLookup };
const char* to_string(Source s);

struct LinkClass {
    TilingType tiling;
    bool arithmetic = false;
    Source source = Source::Computed;
    std::string citation;   // lookups and witnesses
};

LinkClass arithmetic_status(int m, int n);

struct FieldDescriptor {
    /// Squarefree d of Q(sqrt(d)) when the field is quadratic imaginary.
    std::optional<Integer> d;
    std::string text;   // "Q(i*sqrt(6))", or a symbolic description
    Source source = Source::PaperLookup;
};

/// Arithmetic types: the table of invariant trace fields; (6,4) and (6,6)
/// are computed and cross-checked against the table. Non-arithmetic
/// hyperbolic types: the symbolic result k(P)(sqrt(det G')) when `compute`,
/// else a description without computation.
FieldDescriptor trace_field_table(int m, int n, bool compute = true);

struct CommensurabilityVerdict {
    bool commensurable = false;
    std::string clause;   // "same tiling", "Q(i) family", or the reason for a negative
};

CommensurabilityVerdict commensurable(const TilingType& a, const TilingType& b);

/// 1 for non-arithmetic hyperbolic m != n, 2 for non-arithmetic m = n, and
/// empty for arithmetic types. Throws GeometryError for non-hyperbolic input.
std::optional<int> minimal_orbifold_degree(int m, int n);

/// Every valid unordered type with bound >= m >= n >= 3.
std::vector<TilingType> valid_types(int bound);

}   // namespace rtlink

#endif

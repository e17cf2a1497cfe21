#include "rtlink/classifier.hpp"

#include <map>
#include <utility>

#include "rtlink/errors.hpp"
#include "rtlink/trace_field.hpp"
#include "rtlink/vinberg.hpp"

namespace rtlink {

namespace {

struct TableEntry {
    long d;
    const char* citation;
};

// Arithmetic types and their invariant trace fields.
const std::map<std::pair<int, int>, TableEntry>& arithmetic_table() {
    static const std::map<std::pair<int, int>, TableEntry> table{
        {{3, 3}, {-1, "lookup: [3,3,3,3] link (Borromean rings), Bianchi group over Z[i]"}},
        {{4, 3}, {-2, "lookup: [4,3,4,3] link, invariant trace field Q(i*sqrt(2))"}},
        {{4, 4}, {-1, "lookup: [4,4,4,4] links on T^2 (Champanerkar-Kofman-Purcell)"}},
        {{6, 3}, {-3, "lookup: [6,3,6,3] links on T^2 (Champanerkar-Kofman-Purcell)"}},
        {{6, 4}, {-6, "computed: Vinberg certificate, det G' = -3456"}},
        {{6, 6}, {-1, "computed: Vinberg certificate, det G' = -5184"}},
    };
    return table;
}

bool in_gaussian_family(const TilingType& t) {
    return (t.m == 3 && t.n == 3) || (t.m == 4 && t.n == 4) || (t.m == 6 && t.n == 6);
}

std::string pair_text(const TilingType& t) { return "(" + std::to_string(t.m) + "," + std::to_string(t.n) + ")"; }

std::string cell_text(const TilingType& t) {
    if (t.m == 5 && t.n == 3)
        return "icosidodecahedra";
    return std::to_string(t.m) + "-drums and " + std::to_string(t.n) + "-drums";
}

}   // namespace

const char* to_string(Source s) { return s == Source::Computed ? "computed" : "paper_lookup"; }

GeometryVerdict classify_geometry(int m, int n, std::optional<int> genus) {
    GeometryVerdict v;
    v.type = normalize(m, n);
    v.genus = genus;
    if (!genus)
        return v;
    if (*genus < 0)
        throw DomainError("genus must be non-negative");
    // V (2/m + 2/n - 1) = 2 - 2g, i.e. V (2m + 2n - mn) = (2 - 2g) mn.
    const long mm = v.type.m, nn = v.type.n;
    const long k = 2 * mm + 2 * nn - mm * nn;
    const long chi_mn = (2 - 2L * *genus) * mm * nn;
    if (k == 0) {
        v.tiling_exists = chi_mn == 0;
        v.reason = v.tiling_exists ? "Euclidean type on the torus: any vertex count" : "Euclidean type needs genus 1";
        return v;
    }
    if (chi_mn % k != 0 || chi_mn / k <= 0) {
        v.tiling_exists = false;
        v.reason = "Euler count (2-2g)/(2/m+2/n-1) is not a positive integer";
        return v;
    }
    long vertices = chi_mn / k;
    v.vertex_count = vertices;
    if ((2 * vertices) % mm != 0 || (2 * vertices) % nn != 0) {
        v.tiling_exists = false;
        v.reason = "face counts 2V/m, 2V/n are not integers";
        return v;
    }
    v.reason = "V = " + std::to_string(vertices) + ", " + std::to_string(2 * vertices / mm) + " " +
               std::to_string(mm) + "-gons, " + std::to_string(2 * vertices / nn) + " " + std::to_string(nn) + "-gons";
    return v;
}

LinkClass arithmetic_status(int m, int n) {
    LinkClass c;
    c.tiling = normalize(m, n);
    const auto& t = c.tiling;
    if (t.geometry == Geometry::Hyperbolic) {
        SweepRow row = arithmetic_verdict(t.m, t.n);
        c.arithmetic = row.arithmetic;
        c.source = Source::Computed;
        c.citation = row.witness;
        return c;
    }
    if (t.m == 5 && t.n == 3) {
        auto cert = check_arithmetic(build_spherical_presentation(5, 3));
        c.arithmetic = cert.arithmetic;
        c.source = Source::Computed;
        c.citation = cert.arithmetic ? "all conditions hold" : "cycle (1,2) = 4cos^2(pi/5) irrational";
        return c;
    }
    auto it = arithmetic_table().find({t.m, t.n});
    if (it == arithmetic_table().end())
        throw DomainError("no right-angled tiling of type " + pair_text(t));
    c.arithmetic = true;
    c.source = Source::PaperLookup;
    c.citation = it->second.citation;
    return c;
}

FieldDescriptor trace_field_table(int m, int n, bool compute) {
    TilingType t = normalize(m, n);
    auto it = arithmetic_table().find({t.m, t.n});
    if (it != arithmetic_table().end()) {
        QuadraticField table_field{Integer(it->second.d)};
        FieldDescriptor f{table_field.d, table_field.display(), Source::PaperLookup};
        if (t.geometry == Geometry::Hyperbolic) {
            auto computed = invariant_trace_field(build_hyperbolic_presentation(t.m, t.n));
            if (!computed.field || !(*computed.field == table_field))
                throw VerificationError("computed trace field " + computed.description + " disagrees with table entry " +
                                        table_field.display() + " for " + pair_text(t));
            f.source = Source::Computed;
        }
        return f;
    }
    if (t.geometry == Geometry::Euclidean)
        throw DomainError("no right-angled tiling of type " + pair_text(t));
    if (!compute)
        return {std::nullopt, "k(P)(sqrt(det G')), k(P) != Q", Source::Computed};
    auto p = t.geometry == Geometry::Hyperbolic ? build_hyperbolic_presentation(t.m, t.n)
                                                : build_spherical_presentation(t.m, t.n);
    auto r = invariant_trace_field(p);
    FieldDescriptor f{std::nullopt, r.description, Source::Computed};
    if (r.field)
        f.d = r.field->d;
    return f;
}

CommensurabilityVerdict commensurable(const TilingType& a0, const TilingType& b0) {
    TilingType a = normalize(a0.m, a0.n), b = normalize(b0.m, b0.n);
    if (a.m == b.m && a.n == b.n)
        return {true, "same tiling"};
    if (in_gaussian_family(a) && in_gaussian_family(b))
        return {true, "Q(i) family"};
    bool aa = arithmetic_status(a.m, a.n).arithmetic, ba = arithmetic_status(b.m, b.n).arithmetic;
    if (aa && ba) {
        auto fa = trace_field_table(a.m, a.n), fb = trace_field_table(b.m, b.n);
        return {false, "trace fields differ: " + fa.text + " vs " + fb.text};
    }
    if (aa != ba)
        return {false, "arithmeticity differs: " + pair_text(aa ? a : b) + " arithmetic, " + pair_text(aa ? b : a) +
                           " not"};
    return {false, "canonical cells differ: " + cell_text(a) + " vs " + cell_text(b)};
}

std::optional<int> minimal_orbifold_degree(int m, int n) {
    TilingType t = normalize(m, n);
    if (t.geometry != Geometry::Hyperbolic)
        throw GeometryError("minimal orbifold degree is defined for hyperbolic types only");
    if (arithmetic_status(t.m, t.n).arithmetic)
        return std::nullopt;
    return t.m == t.n ? 2 : 1;
}

std::vector<TilingType> valid_types(int bound) {
    std::vector<TilingType> out;
    for (int m = 3; m <= bound; ++m)
        for (int n = 3; n <= m; ++n)
            out.push_back(normalize(m, n));
    return out;
}

}   // namespace rtlink

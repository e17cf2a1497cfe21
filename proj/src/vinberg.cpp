#include "rtlink/vinberg.hpp"

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

std::string faces_label(const std::vector<int>& faces) {
    std::string s = "(";
    for (std::size_t k = 0; k < faces.size(); ++k)
        s += (k ? "," : "") + std::to_string(faces[k] + 1);
    return s + ")";
}

// 4cos^2(pi/k), decided in Q(2cos(pi/k)).
std::optional<Rational> square_of_cos(int k) {
    AlgebraicNumber c = embed_cos(make_context(k), k);
    return (c * c).as_rational();
}

}   // namespace

ArithmeticityCertificate check_arithmetic(const CoxeterPresentation& p) {
    ArithmeticityCertificate cert;
    cert.m = p.m;
    cert.n = p.n;
    const int s = static_cast<int>(p.gram.size());
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) {
            const AlgebraicNumber& a = p.gram[i][j];
            if (a.is_zero())
                continue;
            RatPoly mp = a.minimal_polynomial();
            bool ok = is_integral(mp);
            cert.entries.push_back({i, j, mp, ok});
            if (!ok && !cert.failing_item)
                cert.failing_item = FailingItem{FailingItem::Kind::Entry, cert.entries.size() - 1};
        }
    for (auto& cyc : enumerate_cyclic_products(p)) {
        auto q = cyc.value.as_rational();
        cert.cycles.push_back({cyc.faces, cyc.value, q});
        if (!q && !cert.failing_item)
            cert.failing_item = FailingItem{FailingItem::Kind::Cycle, cert.cycles.size() - 1};
    }
    cert.arithmetic = !cert.failing_item.has_value();
    return cert;
}

bool reproduces_failure(const CoxeterPresentation& p, const ArithmeticityCertificate& cert) {
    if (!cert.failing_item)
        return false;
    const auto& item = *cert.failing_item;
    if (item.kind == FailingItem::Kind::Entry) {
        const auto& e = cert.entries.at(item.index);
        return !p.gram[e.i][e.j].is_algebraic_integer();
    }
    const auto& faces = cert.cycles.at(item.index).faces;
    AlgebraicNumber b = p.gram[faces.back()][faces.front()];
    for (std::size_t k = 0; k + 1 < faces.size(); ++k)
        b = b * p.gram[faces[k]][faces[k + 1]];
    return !b.as_rational().has_value();
}

bool niven_filter(int p) {
    if (p < 3)
        throw DomainError("niven_filter needs p >= 3");
    bool lookup = p == 3 || p == 4 || p == 6;
    // 2cos(2 pi / p) is t_2 in Q(2cos(pi/p)).
    FieldPtr ctx = make_context(p);
    bool exact = AlgebraicNumber(ctx, ctx->cos_multiple(2)).as_rational().has_value();
    if (lookup != exact)
        throw VerificationError("Niven lookup and exact rationality disagree for p=" + std::to_string(p));
    return exact;
}

SweepRow arithmetic_verdict(int m, int n) {
    if (m < 3 || n < 3 || geometry_of(m, n) != Geometry::Hyperbolic)
        throw GeometryError("(" + std::to_string(m) + "," + std::to_string(n) + ") is not hyperbolic");
    SweepRow row{m, n, false, "", false};
    if (!square_of_cos(m)) {
        row.witness = "cycle (1,2) = 4cos^2(pi/" + std::to_string(m) + ") irrational";
        return row;
    }
    if (!square_of_cos(n)) {
        row.witness = "cycle (1,3) = 4cos^2(pi/" + std::to_string(n) + ") irrational";
        return row;
    }
    auto p = build_hyperbolic_presentation(m, n);
    auto cert = check_arithmetic(p);
    row.full_certificate = true;
    row.arithmetic = cert.arithmetic;
    if (cert.arithmetic) {
        const auto& last = cert.cycles.back();
        row.witness = "all entries integral; cycle " + faces_label(last.faces) + " = " + to_string(*last.rational);
    } else if (cert.failing_item->kind == FailingItem::Kind::Entry) {
        const auto& e = cert.entries[cert.failing_item->index];
        row.witness = "entry (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ") not integral";
    } else {
        const auto& c = cert.cycles[cert.failing_item->index];
        row.witness = "cycle " + faces_label(c.faces) + " irrational";
    }
    return row;
}

std::vector<SweepRow> arithmetic_sweep(int m_max, int n_max) {
    std::vector<SweepRow> rows;
    for (int m = 3; m <= m_max; ++m)
        for (int n = 3; n <= n_max; ++n)
            if (geometry_of(m, n) == Geometry::Hyperbolic)
                rows.push_back(arithmetic_verdict(m, n));
    return rows;
}

}   // namespace rtlink

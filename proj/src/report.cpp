#include "rtlink/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

json integer_json(const Integer& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

json coeffs_json(const Coeffs& c) {
    json arr = json::array();
    for (const auto& q : c)
        arr.push_back(json::array({integer_json(num(q)), integer_json(den(q))}));
    return arr;
}

double round12(double x) {
    if (x == 0 || !std::isfinite(x))
        return x;
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return std::stod(s.str());
}

std::string fixed(double x, int digits = 12) {
    std::ostringstream s;
    s << std::setprecision(digits) << x;
    return s.str();
}

json rational_or_null(const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); }

json ratpoly_json(const RatPoly& p) {
    json arr = json::array();
    for (const auto& c : p)
        arr.push_back(to_string(c));
    return arr;
}

json faces_json(const std::vector<int>& faces) {
    json arr = json::array();
    for (int f : faces)
        arr.push_back(f + 1);
    return arr;
}

std::string label_text(const EdgeLabel& l) {
    switch (l.kind) {
    case EdgeLabel::Kind::Angle:
        return "pi/" + std::to_string(l.k);
    case EdgeLabel::Kind::Parallel:
        return "inf";
    case EdgeLabel::Kind::Ultraparallel:
        return "ultraparallel";
    }
    return "?";
}

std::pair<int, int> two_args(const CommandRequest& req) {
    if (req.args.size() != 2)
        throw DomainError(req.command + " expects two integers m n");
    return {req.args[0], req.args[1]};
}

CoxeterPresentation presentation_for(const CommandRequest& req) {
    auto [m0, n0] = two_args(req);
    TilingType t = normalize(m0, n0);
    if (req.spherical)
        return build_spherical_presentation(t.m, t.n);
    if (t.geometry != Geometry::Hyperbolic)
        throw GeometryError("(" + std::to_string(t.m) + "," + std::to_string(t.n) + ") is " + to_string(t.geometry) +
                            "; pass --spherical for the spherical polyhedron");
    return build_hyperbolic_presentation(t.m, t.n);
}

json signature_json(const Signature& s) {
    return {{"rank", s.rank}, {"positive", s.positive}, {"negative", s.negative}};
}

void check_bound(int bound) {
    if (bound < 3 || bound > kMaxReportBound)
        throw DomainError("bound must lie in [3, " + std::to_string(kMaxReportBound) + "]");
}

json drum_json(int m, int n, int side, int samples, std::uint64_t seed) {
    DrumGeometry d = build_drum(m, n, side);
    auto rep = verify_basins(d.cell, samples, seed);
    double link = 2 * d.base_lateral + d.lateral_lateral;
    return {{"cell", d.cell.kind},
            {"base_lateral", round12(d.base_lateral)},
            {"lateral_lateral", round12(d.lateral_lateral)},
            {"radius", round12(d.radius)},
            {"height", round12(d.height)},
            {"vertex_link_error", std::abs(link - std::numbers::pi)},
            {"symmetry_order", d.cell.symmetries.size()},
            {"symmetry_error", symmetry_error(d.cell)},
            {"basins", to_json(rep)}};
}

json platonic_json(PlatonicKind kind, int samples, std::uint64_t seed) {
    Cell c = build_platonic_cell(kind);
    double dihedral_target = kind == PlatonicKind::Tetrahedron ? std::numbers::pi / 3 : std::numbers::pi / 2;
    double worst = 0;
    for (std::size_t a = 0; a < c.faces.size(); ++a)
        for (std::size_t b = a + 1; b < c.faces.size(); ++b) {
            int shared = 0;
            for (int v : c.faces[a])
                for (int w : c.faces[b])
                    shared += v == w;
            if (shared == 2)
                worst = std::max(worst, std::abs(dihedral(c, a, b) - dihedral_target));
        }
    return {{"cell", c.kind},
            {"dihedral_error", worst},
            {"tangency_error", midpoint_tangency_error(c)},
            {"symmetry_order", c.symmetries.size()},
            {"basins", to_json(verify_basins(c, samples, seed))}};
}

json realization_json(const CoxeterPresentation& p) {
    auto r = realize(p);
    const auto& g = p.gram;
    double worst_gram = 0, worst_angle = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            worst_gram = std::max(worst_gram, std::abs(2 * inner(r.normals[i], r.normals[j]) - g[i][j].approx()));
    for (const auto& e : p.edges) {
        double measured = -inner(r.normals[e.i], r.normals[e.j]);
        double expected = e.label.kind == EdgeLabel::Kind::Angle ? std::cos(std::numbers::pi / e.label.k)
                          : e.label.kind == EdgeLabel::Kind::Parallel ? 1.0
                                                                       : e.label.cosh->approx();
        worst_angle = e.label.kind == EdgeLabel::Kind::Angle
                          ? std::max(worst_angle, std::abs(std::acos(std::clamp(measured, -1.0, 1.0)) -
                                                           std::numbers::pi / e.label.k))
                          : std::max(worst_angle, std::abs(measured - expected));
    }
    json verts = json::array();
    std::map<std::string, int> counts;
    for (const auto& v : r.vertices) {
        counts[to_string(v.kind)]++;
        json jv = {{"kind", to_string(v.kind)}, {"faces", faces_json(v.faces)}};
        if (v.truncated_by >= 0)
            jv["truncated_by"] = v.truncated_by + 1;
        verts.push_back(jv);
    }
    return {{"gram_roundtrip_error", worst_gram}, {"label_error", worst_angle}, {"vertices", verts}, {"counts", counts}};
}

}   // namespace

std::string pretty(const AlgebraicNumber& x) {
    if (auto q = x.as_rational())
        return to_string(*q);
    auto sq = (x * x).as_rational();
    if (sq && *sq > 0) {
        // x = +-sqrt(p/r) = +-(root/r) sqrt(core)
        auto dec = squarefree_decompose(num(*sq) * den(*sq));
        Rational coeff(dec.root, den(*sq));
        std::string s = x.sign() < 0 ? "-" : "";
        if (num(coeff) != 1)
            s += num(coeff).str() + "*";
        s += "sqrt(" + dec.core.str() + ")";
        if (den(coeff) != 1)
            s += "/" + den(coeff).str();
        return s;
    }
    return x.to_string();
}

json to_json(const AlgebraicNumber& x) {
    json j;
    j["L"] = x.context()->L();
    j["base"] = coeffs_json(x.base());
    if (x.has_extension_part()) {
        j["ext"] = coeffs_json(x.ext());
        j["radicand"] = to_json(AlgebraicNumber(x.context(), *x.radicand()));
    } else {
        j["ext"] = nullptr;
        j["radicand"] = nullptr;
    }
    j["approx"] = round12(x.approx());
    return j;
}

json to_json(const CoxeterPresentation& p) {
    json j;
    j["m"] = p.m;
    j["n"] = p.n;
    j["spherical"] = p.spherical;
    j["field"] = {{"L", p.ctx->L()},
                  {"generator", "2cos(pi/" + std::to_string(p.ctx->L()) + ")"},
                  {"modulus", poly_to_string(p.ctx->modulus(), "g")}};
    j["faces"] = p.faces;
    json edges = json::array();
    for (const auto& e : p.edges) {
        json je = {{"i", e.i + 1}, {"j", e.j + 1}, {"label", label_text(e.label)}};
        if (e.label.cosh)
            je["cosh"] = to_json(*e.label.cosh);
        edges.push_back(je);
    }
    j["edges"] = edges;
    json gram = json::array(), text = json::array();
    for (const auto& row : p.gram) {
        json r = json::array(), t = json::array();
        for (const auto& x : row) {
            r.push_back(to_json(x));
            t.push_back(pretty(x));
        }
        gram.push_back(r);
        text.push_back(t);
    }
    j["gram"] = gram;
    j["gram_text"] = text;
    return j;
}

json to_json(const ArithmeticityCertificate& c) {
    json j;
    j["m"] = c.m;
    j["n"] = c.n;
    j["arithmetic"] = c.arithmetic;
    json entries = json::array();
    for (const auto& e : c.entries)
        entries.push_back({{"i", e.i + 1},
                           {"j", e.j + 1},
                           {"minpoly", ratpoly_json(e.minpoly)},
                           {"minpoly_text", poly_to_string(e.minpoly)},
                           {"integral", e.integral}});
    j["entries"] = entries;
    json cycles = json::array();
    for (const auto& cy : c.cycles)
        cycles.push_back({{"faces", faces_json(cy.faces)},
                          {"value", to_json(cy.value)},
                          {"value_text", pretty(cy.value)},
                          {"rational", rational_or_null(cy.rational)}});
    j["cycles"] = cycles;
    if (c.failing_item) {
        const auto& f = *c.failing_item;
        if (f.kind == FailingItem::Kind::Entry) {
            const auto& e = c.entries[f.index];
            j["failing_item"] = {{"kind", "entry"}, {"i", e.i + 1}, {"j", e.j + 1}};
        } else {
            j["failing_item"] = {{"kind", "cycle"}, {"faces", faces_json(c.cycles[f.index].faces)}};
        }
    } else {
        j["failing_item"] = nullptr;
    }
    return j;
}

json to_json(const TraceFieldWorksheet& w) {
    json paths = json::array(), c = json::array(), gp = json::array();
    for (const auto& p : w.paths)
        paths.push_back(faces_json(p));
    for (const auto& x : w.c)
        c.push_back(pretty(x));
    for (const auto& row : w.gprime) {
        json r = json::array();
        for (const auto& x : row)
            r.push_back(pretty(x));
        gp.push_back(r);
    }
    return {{"paths", paths}, {"c", c}, {"basis", faces_json(w.basis)}, {"gprime", gp}, {"det", pretty(w.det)}};
}

json to_json(const TraceFieldResult& r) {
    json gens = json::array();
    for (const auto& g : r.kp_generators)
        gens.push_back({{"faces", faces_json(g.faces)}, {"value", pretty(g.value)}});
    json j = {{"kP_rational", r.kp_rational}, {"kP_generators", gens}, {"det", to_json(r.det)},
              {"det_text", pretty(r.det)}, {"field", r.description}};
    j["field_display"] = r.field ? json(r.field->display()) : json(nullptr);
    j["d"] = r.field ? integer_json(r.field->d) : json(nullptr);
    return j;
}

json to_json(const CanonicalCheckReport& r) {
    return {{"cell", r.cell},
            {"samples", r.samples},
            {"tested", r.tested},
            {"violations", r.violations},
            {"skipped", r.skipped},
            {"wall_crossings", r.wall_crossings},
            {"max_margin_at_walls", r.max_margin_at_walls},
            {"tolerance", r.tolerance},
            {"seed", r.seed}};
}

json build_report(const ReportOptions& opt) {
    check_bound(opt.bound);
    json rows = json::array(), arithmetic = json::array();
    std::vector<TilingType> types = valid_types(opt.bound);
    std::vector<int> class_id(types.size(), -1);
    int next_id = 0;
    for (std::size_t a = 0; a < types.size(); ++a) {
        if (class_id[a] >= 0)
            continue;
        class_id[a] = next_id;
        for (std::size_t b = a + 1; b < types.size(); ++b)
            if (class_id[b] < 0 && commensurable(types[a], types[b]).commensurable)
                class_id[b] = next_id;
        ++next_id;
    }
    std::map<int, json> classes;
    for (std::size_t k = 0; k < types.size(); ++k) {
        const auto& t = types[k];
        LinkClass lc = arithmetic_status(t.m, t.n);
        json row = {{"m", t.m},
                    {"n", t.n},
                    {"geometry", to_string(t.geometry)},
                    {"arithmetic", lc.arithmetic},
                    {"source", to_string(lc.source)},
                    {"citation", lc.citation},
                    {"commensurability_class_id", class_id[k]}};
        bool known_field = lc.arithmetic || t.geometry == Geometry::Spherical;
        if (t.geometry != Geometry::Euclidean || lc.arithmetic)
            row["trace_field"] = trace_field_table(t.m, t.n, known_field).text;
        if (t.geometry == Geometry::Hyperbolic) {
            auto deg = minimal_orbifold_degree(t.m, t.n);
            row["min_orbifold_degree"] = deg ? json(*deg) : json("not_applicable");
        } else {
            row["min_orbifold_degree"] = "not_applicable";
        }
        rows.push_back(row);
        if (lc.arithmetic)
            arithmetic.push_back({t.m, t.n});
        classes[class_id[k]].push_back({t.m, t.n});
    }
    json class_list = json::array();
    for (auto& [id, members] : classes)
        class_list.push_back({{"id", id}, {"members", members}});

    json geometry = json::array();
    geometry.push_back(platonic_json(PlatonicKind::Tetrahedron, opt.samples, opt.seed));
    geometry.push_back(platonic_json(PlatonicKind::Octahedron, opt.samples, opt.seed));
    for (auto [m, n] : {std::pair{6, 6}, std::pair{6, 4}})
        for (int side : {m, n}) {
            json d = drum_json(m, n, side, opt.samples, opt.seed);
            d["tiling"] = {m, n};
            geometry.push_back(d);
            if (m == n)
                break;
        }
    return {{"bound", opt.bound},
            {"rows", rows},
            {"arithmetic_types", arithmetic},
            {"commensurability_classes", class_list},
            {"geometry", geometry}};
}

std::string report_csv(const json& report) {
    std::ostringstream out;
    out << "m,n,geometry,arithmetic,trace_field,min_orbifold_degree,commensurability_class_id\n";
    for (const auto& r : report["rows"]) {
        std::string field = r.contains("trace_field") ? r["trace_field"].get<std::string>() : "";
        std::string deg = r["min_orbifold_degree"].is_number() ? std::to_string(r["min_orbifold_degree"].get<int>())
                                                                : r["min_orbifold_degree"].get<std::string>();
        out << r["m"].get<int>() << "," << r["n"].get<int>() << "," << r["geometry"].get<std::string>() << ","
            << (r["arithmetic"].get<bool>() ? "true" : "false") << ",\"" << field << "\"," << deg << ","
            << r["commensurability_class_id"].get<int>() << "\n";
    }
    return out.str();
}

json execute(const CommandRequest& req) {
    const std::string& cmd = req.command;
    if (cmd == "gram") {
        auto p = presentation_for(req);
        json j = to_json(p);
        j["signature"] = signature_json(rank_and_signature(p));
        return j;
    }
    if (cmd == "arithmetic") {
        auto p = presentation_for(req);
        auto sig = rank_and_signature(p);
        if (sig.rank != 4 || sig.positive != 3 || sig.negative != 1)
            throw VerificationError("Gram matrix fails the rank 4, signature (3,1) check");
        json j = to_json(check_arithmetic(p));
        j["signature"] = signature_json(sig);
        return j;
    }
    if (cmd == "tracefield") {
        auto p = presentation_for(req);
        json j = to_json(invariant_trace_field(p));
        j["m"] = p.m;
        j["n"] = p.n;
        j["worksheet"] = to_json(build_worksheet(p));
        return j;
    }
    if (cmd == "classify") {
        auto [m, n] = two_args(req);
        auto g = classify_geometry(m, n, req.genus);
        const auto& t = g.type;
        LinkClass lc = arithmetic_status(t.m, t.n);
        json j = {{"m", t.m},
                  {"n", t.n},
                  {"geometry", to_string(t.geometry)},
                  {"arithmetic", lc.arithmetic},
                  {"source", to_string(lc.source)},
                  {"citation", lc.citation},
                  {"trace_field", trace_field_table(t.m, t.n).text}};
        if (t.geometry == Geometry::Hyperbolic) {
            auto deg = minimal_orbifold_degree(t.m, t.n);
            j["min_orbifold_degree"] = deg ? json(*deg) : json("not_applicable");
        } else {
            j["min_orbifold_degree"] = "not_applicable";
        }
        if (req.genus) {
            j["genus"] = *req.genus;
            j["tiling_exists"] = g.tiling_exists;
            j["vertex_count"] = g.vertex_count ? json(*g.vertex_count) : json(nullptr);
            j["euler_note"] = g.reason;
        }
        return j;
    }
    if (cmd == "commensurable") {
        if (req.args.size() != 4)
            throw DomainError("commensurable expects four integers m1 n1 m2 n2");
        TilingType a = normalize(req.args[0], req.args[1]), b = normalize(req.args[2], req.args[3]);
        auto v = commensurable(a, b);
        return {{"a", {a.m, a.n}}, {"b", {b.m, b.n}}, {"commensurable", v.commensurable}, {"clause", v.clause}};
    }
    if (cmd == "geometry-verify") {
        auto [m0, n0] = two_args(req);
        TilingType t = normalize(m0, n0);
        json j = {{"m", t.m}, {"n", t.n}, {"geometry", to_string(t.geometry)}, {"seed", req.seed}};
        bool ok = true;
        if (t.geometry == Geometry::Hyperbolic) {
            auto p = build_hyperbolic_presentation(t.m, t.n);
            j["realization"] = realization_json(p);
            auto ang = tiling_angles(t.m, t.n);
            j["tiling_angles"] = {{"alpha_m", round12(ang.alpha_m)}, {"alpha_n", round12(ang.alpha_n)}};
            json drums = json::array();
            for (int side : {t.m, t.n}) {
                drums.push_back(drum_json(t.m, t.n, side, req.samples, req.seed));
                if (t.m == t.n)
                    break;
            }
            for (const auto& d : drums)
                ok = ok && d["basins"]["violations"] == 0 && d["basins"]["max_margin_at_walls"] < 1e-8;
            j["drums"] = drums;
            auto glue = verify_gluing_angles(t.m, t.n);
            j["gluing"] = {{"base_lateral_sum", round12(glue.base_lateral_sum)},
                           {"lateral_lateral_sum", round12(glue.lateral_lateral_sum)},
                           {"ok", glue.ok}};
            ok = ok && glue.ok && j["realization"]["label_error"] < 1e-9;
        } else if (t.geometry == Geometry::Spherical) {
            j["realization"] = realization_json(build_spherical_presentation(t.m, t.n));
            ok = j["realization"]["label_error"] < 1e-9;
        } else {
            json cells = json::array();
            for (auto kind : {PlatonicKind::Tetrahedron, PlatonicKind::Octahedron}) {
                json c = platonic_json(kind, req.samples, req.seed);
                ok = ok && c["basins"]["violations"] == 0 && c["tangency_error"] < 1e-9 && c["dihedral_error"] < 1e-9;
                cells.push_back(c);
            }
            j["cells"] = cells;
        }
        j["ok"] = ok;
        return j;
    }
    if (cmd == "sweep") {
        check_bound(req.bound);
        json rows = json::array(), arith = json::array();
        for (const auto& r : arithmetic_sweep(req.bound, req.bound)) {
            rows.push_back({{"m", r.m},
                            {"n", r.n},
                            {"arithmetic", r.arithmetic},
                            {"witness", r.witness},
                            {"full_certificate", r.full_certificate}});
            if (r.arithmetic)
                arith.push_back({r.m, r.n});
        }
        return {{"bound", req.bound}, {"rows", rows}, {"arithmetic", arith}};
    }
    if (cmd == "report")
        return build_report({req.bound, req.samples, req.seed});
    throw DomainError("unknown command '" + cmd + "'");
}

std::string render_text(const CommandRequest& req, const json& j) {
    std::ostringstream out;
    const std::string& cmd = req.command;
    if (cmd == "gram") {
        out << "Gram matrix of P(" << j["m"] << "," << j["n"] << ")" << (j["spherical"].get<bool>() ? " [spherical]" : "")
            << ", field Q(g), g = " << j["field"]["generator"].get<std::string>() << ", "
            << j["field"]["modulus"].get<std::string>() << " = 0\n";
        std::size_t width = 0;
        for (const auto& row : j["gram_text"])
            for (const auto& x : row)
                width = std::max(width, x.get<std::string>().size());
        for (const auto& row : j["gram_text"]) {
            out << "  [";
            for (const auto& x : row)
                out << " " << std::setw(static_cast<int>(width)) << x.get<std::string>();
            out << " ]\n";
        }
        out << "approximate:\n";
        for (const auto& row : j["gram"]) {
            out << "  [";
            for (const auto& x : row)
                out << " " << std::setw(14) << fixed(x["approx"].get<double>());
            out << " ]\n";
        }
        const auto& s = j["signature"];
        out << "rank " << s["rank"] << ", signature (" << s["positive"] << "," << s["negative"] << ")\n";
    } else if (cmd == "arithmetic") {
        out << "P(" << j["m"] << "," << j["n"] << "): " << (j["arithmetic"].get<bool>() ? "arithmetic" : "non-arithmetic")
            << "\n";
        out << "entries:\n";
        for (const auto& e : j["entries"])
            out << "  a" << e["i"] << e["j"] << "  minpoly " << e["minpoly_text"].get<std::string>() << "  "
                << (e["integral"].get<bool>() ? "integral" : "NOT integral") << "\n";
        out << "cyclic products:\n";
        for (const auto& c : j["cycles"]) {
            std::string faces;
            for (const auto& f : c["faces"])
                faces += (faces.empty() ? "" : ",") + std::to_string(f.get<int>());
            out << "  (" << faces << ")  " << c["value_text"].get<std::string>() << "  ~ "
                << fixed(c["value"]["approx"].get<double>()) << "  "
                << (c["rational"].is_null() ? "irrational" : "rational") << "\n";
        }
        if (!j["failing_item"].is_null())
            out << "failing item: " << j["failing_item"].dump() << "\n";
    } else if (cmd == "tracefield") {
        const auto& w = j["worksheet"];
        out << "P(" << j["m"] << "," << j["n"] << ") worksheet, basis " << w["basis"].dump() << "\n";
        out << "  c = " << w["c"].dump() << "\n  G' =\n";
        for (const auto& row : w["gprime"])
            out << "    " << row.dump() << "\n";
        out << "  det G' = " << j["det_text"].get<std::string>() << "\n";
        out << "k(P) = " << (j["kP_rational"].get<bool>() ? "Q" : "non-rational") << "\n";
        out << "invariant trace field: "
            << (j["field_display"].is_null() ? j["field"].get<std::string>() : j["field_display"].get<std::string>())
            << "\n";
    } else if (cmd == "classify") {
        out << "(" << j["m"] << "," << j["n"] << ") " << j["geometry"].get<std::string>() << ", "
            << (j["arithmetic"].get<bool>() ? "arithmetic" : "non-arithmetic") << " ["
            << j["source"].get<std::string>() << ": " << j["citation"].get<std::string>() << "]\n";
        out << "invariant trace field: " << j["trace_field"].get<std::string>() << "\n";
        out << "minimal orbifold degree: "
            << (j["min_orbifold_degree"].is_number() ? std::to_string(j["min_orbifold_degree"].get<int>())
                                                      : j["min_orbifold_degree"].get<std::string>())
            << "\n";
        if (j.contains("genus"))
            out << "genus " << j["genus"] << ": " << (j["tiling_exists"].get<bool>() ? "" : "no tiling; ")
                << j["euler_note"].get<std::string>() << "\n";
    } else if (cmd == "commensurable") {
        out << (j["commensurable"].get<bool>() ? "true" : "false") << " (" << j["clause"].get<std::string>() << ")\n";
    } else if (cmd == "geometry-verify") {
        out << "(" << j["m"] << "," << j["n"] << ") " << j["geometry"].get<std::string>() << ", seed " << j["seed"]
            << "\n";
        if (j.contains("realization")) {
            const auto& r = j["realization"];
            out << "  realization: label error " << r["label_error"] << ", gram round-trip error "
                << r["gram_roundtrip_error"] << ", vertices " << r["counts"].dump() << "\n";
        }
        if (j.contains("tiling_angles"))
            out << "  tiling angles: alpha_m " << fixed(j["tiling_angles"]["alpha_m"]) << ", alpha_n "
                << fixed(j["tiling_angles"]["alpha_n"]) << "\n";
        auto basin_line = [&](const json& b) {
            out << "    basins: " << b["tested"] << " tested, " << b["violations"] << " violations, " << b["skipped"]
                << " skipped, max wall margin " << b["max_margin_at_walls"] << "\n";
        };
        if (j.contains("drums"))
            for (const auto& d : j["drums"]) {
                out << "  " << d["cell"].get<std::string>() << ": base-lateral " << fixed(d["base_lateral"])
                    << ", lateral-lateral " << fixed(d["lateral_lateral"]) << ", symmetries " << d["symmetry_order"]
                    << "\n";
                basin_line(d["basins"]);
            }
        if (j.contains("gluing"))
            out << "  gluing: base-lateral class " << fixed(j["gluing"]["base_lateral_sum"]) << ", lateral-lateral class "
                << fixed(j["gluing"]["lateral_lateral_sum"]) << " (2pi = " << fixed(2 * std::numbers::pi) << ")\n";
        if (j.contains("cells"))
            for (const auto& c : j["cells"]) {
                out << "  " << c["cell"].get<std::string>() << ": dihedral error " << c["dihedral_error"]
                    << ", tangency error " << c["tangency_error"] << "\n";
                basin_line(c["basins"]);
            }
        out << (j["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    } else if (cmd == "sweep") {
        out << "hyperbolic (m,n) with 3 <= m,n <= " << j["bound"] << ": " << j["rows"].size() << " pairs\n";
        out << "arithmetic: ";
        for (const auto& p : j["arithmetic"])
            out << "(" << p[0] << "," << p[1] << ") ";
        out << "\n";
    } else if (cmd == "report") {
        out << "Right-angled tiling links, m,n <= " << j["bound"] << "\n\n";
        std::size_t fw = 22;
        for (const auto& r : j["rows"])
            if (r.contains("trace_field"))
                fw = std::max(fw, r["trace_field"].get<std::string>().size() + 2);
        int field_width = static_cast<int>(fw);
        out << std::left << std::setw(8) << "(m,n)" << std::setw(12) << "geometry" << std::setw(16) << "arithmetic"
            << std::setw(field_width) << "trace field" << std::setw(10) << "min deg"
            << "class\n";
        for (const auto& r : j["rows"]) {
            std::string pair = "(" + std::to_string(r["m"].get<int>()) + "," + std::to_string(r["n"].get<int>()) + ")";
            std::string field = r.contains("trace_field") ? r["trace_field"].get<std::string>() : "-";
            if (!r["arithmetic"].get<bool>() && r["geometry"] == "hyperbolic")
                field = "k(P) != Q";
            std::string deg = r["min_orbifold_degree"].is_number()
                                  ? std::to_string(r["min_orbifold_degree"].get<int>())
                                  : std::string("n/a");
            out << std::setw(8) << pair << std::setw(12) << r["geometry"].get<std::string>() << std::setw(16)
                << (r["arithmetic"].get<bool>() ? "arithmetic" : "non-arith") << std::setw(field_width) << field << std::setw(10)
                << deg << r["commensurability_class_id"].get<int>() << "\n";
        }
        out << "\narithmetic types: ";
        for (const auto& p : j["arithmetic_types"])
            out << "(" << p[0] << "," << p[1] << ") ";
        out << "\ncommensurability classes with more than one member:\n";
        for (const auto& c : j["commensurability_classes"])
            if (c["members"].size() > 1)
                out << "  " << c["members"].dump() << "\n";
        out << "\ngeometry checks:\n";
        for (const auto& g : j["geometry"]) {
            std::string name = g["cell"].get<std::string>();
            if (g.contains("tiling"))
                name += " of (" + std::to_string(g["tiling"][0].get<int>()) + "," +
                        std::to_string(g["tiling"][1].get<int>()) + ")";
            out << "  " << std::setw(18) << name << g["basins"]["violations"]
                << " violations in " << g["basins"]["tested"] << " samples\n";
        }
    }
    return out.str();
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    try {
        json j = execute(req);
        if (req.format == "json")
            out << j.dump(2) << "\n";
        else if (req.format == "csv" && req.command == "report")
            out << report_csv(j);
        else if (req.format == "text")
            out << render_text(req, j);
        else
            throw DomainError("unsupported format '" + req.format + "' for " + req.command);
        if (j.contains("ok") && !j["ok"].get<bool>()) {
            err << "error: verification: geometry checks failed\n";
            return 3;
        }
        return 0;
    } catch (const DomainError& e) {
        err << "error: domain: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "error: verification: " << e.what() << "\n";
        return 3;
    } catch (const ArithmeticError& e) {
        err << "error: arithmetic: " << e.what() << "\n";
        return 3;
    }
}

}   // namespace rtlink

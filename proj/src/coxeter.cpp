#include "rtlink/coxeter.hpp"

#include <functional>
#include <numeric>

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

AlgebraicNumber rat(const FieldPtr& ctx, const Rational& q) { return AlgebraicNumber::rational(ctx, q); }

ExactMatrix identity_gram(const FieldPtr& ctx, int size) {
    ExactMatrix g(size, std::vector<AlgebraicNumber>(size, rat(ctx, 0)));
    for (int i = 0; i < size; ++i)
        g[i][i] = rat(ctx, 2);
    return g;
}

void set_pair(ExactMatrix& g, int i, int j, const AlgebraicNumber& v) {
    g[i][j] = v;
    g[j][i] = v;
}

std::vector<std::string> face_names(int count) {
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i)
        names.push_back("F" + std::to_string(i));
    return names;
}

// Shared part of both diagrams: F2-F1 (m), F1-F3 (n), F2-F4 and F3-F5 parallel.
void fill_common(CoxeterPresentation& p) {
    auto& ctx = p.ctx;
    set_pair(p.gram, 0, 1, -embed_cos(ctx, p.m));
    set_pair(p.gram, 0, 2, -embed_cos(ctx, p.n));
    set_pair(p.gram, 1, 3, rat(ctx, -2));
    set_pair(p.gram, 2, 4, rat(ctx, -2));
    p.edges.push_back({0, 1, {EdgeLabel::Kind::Angle, p.m, std::nullopt}});
    p.edges.push_back({0, 2, {EdgeLabel::Kind::Angle, p.n, std::nullopt}});
    p.edges.push_back({1, 3, {EdgeLabel::Kind::Parallel, 0, std::nullopt}});
    p.edges.push_back({2, 4, {EdgeLabel::Kind::Parallel, 0, std::nullopt}});
}

}   // namespace

std::string to_string(Geometry g) {
    switch (g) {
    case Geometry::Spherical:
        return "spherical";
    case Geometry::Euclidean:
        return "euclidean";
    case Geometry::Hyperbolic:
        return "hyperbolic";
    }
    return "unknown";
}

Geometry geometry_of(int m, int n) {
    // 1/m + 1/n vs 1/2  <=>  2(m + n) vs mn
    long lhs = 2L * (m + n), rhs = static_cast<long>(m) * n;
    if (lhs > rhs)
        return Geometry::Spherical;
    if (lhs == rhs)
        return Geometry::Euclidean;
    return Geometry::Hyperbolic;
}

TilingType normalize(int m, int n) {
    if (m < 3 || n < 3)
        throw DomainError("tiling type needs m, n >= 3, got (" + std::to_string(m) + "," + std::to_string(n) + ")");
    if (m < n)
        std::swap(m, n);
    return {m, n, geometry_of(m, n)};
}

AlgebraicNumber ultraparallel_radicand(const FieldPtr& ctx, int m, int n) {
    AlgebraicNumber cm = embed_cos(ctx, m) * Rational(1, 2);
    AlgebraicNumber cn = embed_cos(ctx, n) * Rational(1, 2);
    return cm * cm + cn * cn - rat(ctx, 1);
}

CoxeterPresentation build_hyperbolic_presentation(int m, int n) {
    if (m < 3 || n < 3 || geometry_of(m, n) != Geometry::Hyperbolic)
        throw GeometryError("(" + std::to_string(m) + "," + std::to_string(n) + ") is not a hyperbolic tiling type");
    CoxeterPresentation p;
    p.m = m;
    p.n = n;
    p.ctx = make_context(std::lcm(m, n));
    p.faces = face_names(6);
    p.gram = identity_gram(p.ctx, 6);
    fill_common(p);

    AlgebraicNumber inv_root = adjoin_sqrt(ultraparallel_radicand(p.ctx, m, n)).inverse();
    AlgebraicNumber c_mn = embed_cos(p.ctx, m) * Rational(1, 2) * inv_root;
    AlgebraicNumber c_nm = embed_cos(p.ctx, n) * Rational(1, 2) * inv_root;
    set_pair(p.gram, 3, 5, c_mn * Rational(-2));
    set_pair(p.gram, 4, 5, c_nm * Rational(-2));
    p.edges.push_back({3, 5, {EdgeLabel::Kind::Ultraparallel, 0, c_mn}});
    p.edges.push_back({4, 5, {EdgeLabel::Kind::Ultraparallel, 0, c_nm}});
    return p;
}

CoxeterPresentation build_spherical_presentation(int m, int n) {
    if (m < 3 || n < 3 || geometry_of(m, n) != Geometry::Spherical)
        throw GeometryError("(" + std::to_string(m) + "," + std::to_string(n) + ") is not a spherical tiling type");
    CoxeterPresentation p;
    p.m = m;
    p.n = n;
    p.spherical = true;
    p.ctx = make_context(std::lcm(m, n));
    p.faces = face_names(5);
    p.gram = identity_gram(p.ctx, 5);
    fill_common(p);
    return p;
}

UltraparallelSolution solve_ultraparallel_by_minor(int m, int n) {
    if (m < 3 || n < 3)
        throw DomainError("m, n must be at least 3");
    FieldPtr ctx = make_context(std::lcm(m, n));
    // Gram matrix with a46 = x, a56 = y left open.
    auto gram_with = [&](const Rational& x, const Rational& y) {
        CoxeterPresentation p;
        p.m = m;
        p.n = n;
        p.ctx = ctx;
        p.gram = identity_gram(ctx, 6);
        fill_common(p);
        set_pair(p.gram, 3, 5, rat(ctx, x));
        set_pair(p.gram, 4, 5, rat(ctx, y));
        return p.gram;
    };
    // The minor without face `drop` is quadratic in the open entry it keeps:
    // det = c0 + c1 t + c2 t^2, recovered from t = 0, 1, -1.
    auto solve = [&](int drop, bool open_is_x) {
        std::vector<int> keep;
        for (int i = 0; i < 6; ++i)
            if (i != drop)
                keep.push_back(i);
        auto minor_at = [&](const Rational& t) {
            ExactMatrix g = open_is_x ? gram_with(t, 0) : gram_with(0, t);
            return determinant(submatrix(g, keep, keep));
        };
        AlgebraicNumber f0 = minor_at(0), f1 = minor_at(1), fm = minor_at(-1);
        AlgebraicNumber c2 = (f1 + fm) * Rational(1, 2) - f0;
        AlgebraicNumber c1 = (f1 - fm) * Rational(1, 2);
        if (!c1.is_zero())
            throw VerificationError("minor determinant has an unexpected linear term");
        if (c2.is_zero())
            throw GeometryError("minor determinant does not constrain the ultraparallel entry");
        AlgebraicNumber t_squared = -(f0 / c2);
        // The entry is -2 cosh l < 0, so cosh l = sqrt(t^2) / 2.
        return adjoin_sqrt(t_squared) * Rational(1, 2);
    };
    return {solve(4, true), solve(3, false)};
}

std::vector<CyclicProduct> enumerate_cyclic_products(const CoxeterPresentation& p) {
    const auto& g = p.gram;
    const int s = static_cast<int>(g.size());
    std::vector<std::vector<int>> adj(s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (i != j && !g[i][j].is_zero())
                adj[i].push_back(j);

    std::vector<CyclicProduct> out;
    for (int i = 0; i < s; ++i)
        for (int j : adj[i])
            if (j > i)
                out.push_back({{i, j}, g[i][j] * g[j][i]});

    std::vector<std::vector<int>> longer;
    std::vector<int> path;
    std::vector<bool> used(s, false);
    std::function<void(int, int)> extend = [&](int start, int v) {
        for (int w : adj[v]) {
            if (w == start && path.size() >= 3 && path[1] < path.back())
                longer.push_back(path);
            if (w <= start || used[w])
                continue;
            used[w] = true;
            path.push_back(w);
            extend(start, w);
            path.pop_back();
            used[w] = false;
        }
    };
    for (int start = 0; start < s; ++start) {
        path = {start};
        used.assign(s, false);
        used[start] = true;
        extend(start, start);
    }
    std::stable_sort(longer.begin(), longer.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& cyc : longer) {
        AlgebraicNumber b = g[cyc.back()][cyc.front()];
        for (std::size_t k = 0; k + 1 < cyc.size(); ++k)
            b = b * g[cyc[k]][cyc[k + 1]];
        out.push_back({cyc, b});
    }
    return out;
}

Signature rank_and_signature(const CoxeterPresentation& p) { return rank_and_signature(p.gram); }

}   // namespace rtlink

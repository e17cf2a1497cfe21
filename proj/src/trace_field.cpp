#include "rtlink/trace_field.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

std::vector<int> spanning_parents(const ExactMatrix& g, PathStrategy strategy, std::uint64_t seed) {
    const int s = static_cast<int>(g.size());
    std::vector<std::vector<int>> adj(s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (i != j && !g[i][j].is_zero())
                adj[i].push_back(j);
    std::mt19937_64 rng(seed);
    if (strategy == PathStrategy::RandomTree)
        for (auto& nb : adj)
            std::shuffle(nb.begin(), nb.end(), rng);

    std::vector<int> parent(s, -2);
    parent[0] = -1;
    if (strategy == PathStrategy::DepthFirst) {
        std::vector<int> stack{0};
        std::vector<std::size_t> next(s, 0);
        while (!stack.empty()) {
            int v = stack.back();
            if (next[v] == adj[v].size()) {
                stack.pop_back();
                continue;
            }
            int w = adj[v][next[v]++];
            if (parent[w] == -2) {
                parent[w] = v;
                stack.push_back(w);
            }
        }
    } else {
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (parent[w] == -2) {
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
    }
    for (int v = 0; v < s; ++v)
        if (parent[v] == -2)
            throw DomainError("Coxeter diagram is disconnected: F" + std::to_string(v + 1) + " unreachable from F1");
    return parent;
}

}   // namespace

TraceFieldWorksheet build_worksheet(const CoxeterPresentation& p, PathStrategy strategy, std::uint64_t seed) {
    const auto& g = p.gram;
    const int s = static_cast<int>(g.size());
    if (s < 4)
        throw DomainError("worksheet needs at least four faces");
    auto parent = spanning_parents(g, strategy, seed);

    TraceFieldWorksheet w{{}, {}, {}, {}, AlgebraicNumber::rational(p.ctx, 0)};
    w.paths.resize(s);
    for (int r = 0; r < s; ++r) {
        for (int v = r; v != -1; v = parent[v])
            w.paths[r].push_back(v);
        std::reverse(w.paths[r].begin(), w.paths[r].end());
    }
    for (int r = 0; r < s; ++r) {
        if (r == 0) {
            w.c.push_back(g[0][0]);
            continue;
        }
        const auto& path = w.paths[r];
        AlgebraicNumber c = g[path[0]][path[1]];
        for (std::size_t k = 1; k + 1 < path.size(); ++k)
            c = c * g[path[k]][path[k + 1]];
        w.c.push_back(c);
    }

    auto nonsingular = [&](const std::vector<int>& idx) { return !determinant(submatrix(g, idx, idx)).is_zero(); };
    std::vector<int> preferred{0, 1, 2, 3};
    if (nonsingular(preferred)) {
        w.basis = preferred;
    } else {
        for (int a = 0; a < s && w.basis.empty(); ++a)
            for (int b = a + 1; b < s && w.basis.empty(); ++b)
                for (int c = b + 1; c < s && w.basis.empty(); ++c)
                    for (int d = c + 1; d < s && w.basis.empty(); ++d)
                        if (nonsingular({a, b, c, d}))
                            w.basis = {a, b, c, d};
        if (w.basis.empty())
            throw VerificationError("no four faces span: Gram matrix has rank below 4");
    }
    for (int bi : w.basis) {
        std::vector<AlgebraicNumber> row;
        for (int bj : w.basis)
            row.push_back(w.c[bi] * w.c[bj] * g[bi][bj]);
        w.gprime.push_back(std::move(row));
    }
    w.det = determinant(w.gprime);
    return w;
}

AlgebraicNumber gprime_determinant(const TraceFieldWorksheet& w) {
    AlgebraicNumber det = determinant(w.gprime);
    if (det.is_zero())
        throw VerificationError("worksheet basis is singular");
    return det;
}

std::string QuadraticField::canonical() const {
    if (d == 1)
        return "Q";
    return "Q(sqrt(" + d.str() + "))";
}

std::string QuadraticField::display() const {
    if (d == 1)
        return "Q";
    if (d == -1)
        return "Q(i)";
    if (d < 0)
        return "Q(i*sqrt(" + Integer(-d).str() + "))";
    return "Q(sqrt(" + d.str() + "))";
}

QuadraticField quadratic_field_of(const Rational& q) {
    if (q == 0)
        throw DomainError("zero has no square class");
    // p/r and p*r differ by the square r^2.
    return {squarefree_decompose(num(q) * den(q)).core};
}

TraceFieldResult invariant_trace_field(const CoxeterPresentation& p, PathStrategy strategy, std::uint64_t seed) {
    TraceFieldResult result{false, {}, AlgebraicNumber::rational(p.ctx, 0), std::nullopt, ""};
    for (auto& cyc : enumerate_cyclic_products(p))
        if (!cyc.value.as_rational())
            result.kp_generators.push_back(cyc);
    result.kp_rational = result.kp_generators.empty();

    auto w = build_worksheet(p, strategy, seed);
    result.det = gprime_determinant(w);
    if (result.kp_rational) {
        auto q = result.det.as_rational();
        if (!q)
            throw VerificationError("det G' is irrational although every cyclic product is rational");
        result.field = quadratic_field_of(*q);
        result.description = result.field->canonical();
    } else {
        result.description = "k(P)(sqrt(" + result.det.to_string() + "))";
    }
    return result;
}

}   // namespace rtlink

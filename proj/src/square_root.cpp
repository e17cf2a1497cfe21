#include <map>
#include <set>

#include "rtlink/algebraic_number.hpp"
#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

constexpr int kMaxPatterns = 1 << 16;

// Representative in (0, L) of the product j1 * j2 acting on 2cos(pi j / L).
int compose(int j1, int j2, int L) {
    long k = (static_cast<long>(j1) * j2) % (2L * L);
    return static_cast<int>(k > L ? 2L * L - k : k);
}

// Homomorphisms H -> {+1, -1}, each as a map from element to sign.
std::vector<std::map<int, int>> quadratic_characters(const std::vector<int>& group, int L) {
    // Greedy generating set: add any element not yet in the span.
    std::vector<int> gens;
    std::set<int> span{1};
    for (int h : group) {
        if (span.count(h))
            continue;
        gens.push_back(h);
        std::vector<int> frontier(span.begin(), span.end());
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier)
                for (int gen : gens) {
                    int y = compose(x, gen, L);
                    if (span.insert(y).second)
                        next.push_back(y);
                }
            frontier = std::move(next);
        }
    }
    std::vector<std::map<int, int>> result;
    for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
        std::map<int, int> chi{{1, 1}};
        std::vector<int> frontier{1};
        bool ok = true;
        while (!frontier.empty() && ok) {
            std::vector<int> next;
            for (int x : frontier)
                for (std::size_t g = 0; g < gens.size() && ok; ++g) {
                    int y = compose(x, gens[g], L);
                    int s = chi[x] * ((mask >> g) & 1u ? -1 : 1);
                    auto [it, inserted] = chi.emplace(y, s);
                    if (inserted)
                        next.push_back(y);
                    else if (it->second != s)
                        ok = false;
                }
            frontier = std::move(next);
        }
        if (ok)
            result.push_back(std::move(chi));
    }
    return result;
}

// Solves the Vandermonde system sum_i c_i x_k^i = y_k.
std::vector<Real> solve_vandermonde(const std::vector<Real>& x, const std::vector<Real>& y) {
    const std::size_t n = x.size();
    std::vector<std::vector<Real>> a(n, std::vector<Real>(n + 1));
    for (std::size_t k = 0; k < n; ++k) {
        Real p = 1;
        for (std::size_t i = 0; i < n; ++i) {
            a[k][i] = p;
            p *= x[k];
        }
        a[k][n] = y[k];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(a[r][c]) > abs(a[piv][c]))
                piv = r;
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c)
                continue;
            Real f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Real> sol(n);
    for (std::size_t i = 0; i < n; ++i)
        sol[i] = a[i][n] / a[i][i];
    return sol;
}

std::optional<Coeffs> find_square_root(const FieldContext& k, const Coeffs& d) {
    const auto& conj = k.conjugate_indices();
    const int L = k.L();
    std::map<int, Real> root_value;
    for (int j : conj) {
        if (certified_sign(k, d, j) < 0)
            return std::nullopt;   // not totally positive
        root_value[j] = sqrt(k.evaluate<Real>(d, j).first);
    }
    if (k.degree() == 1) {
        auto r = rational_sqrt(d[0]);
        if (!r)
            return std::nullopt;
        return k.constant(*r);
    }

    std::vector<int> stabilizer;
    for (int j : conj)
        if (j == 1 || FieldContext::is_zero(k.sub(k.galois(d, j), d)))
            stabilizer.push_back(j);
    std::vector<int> cosets;
    std::set<int> covered;
    for (int j : conj) {
        if (covered.count(j))
            continue;
        cosets.push_back(j);
        for (int h : stabilizer)
            covered.insert(compose(j, h, L));
    }
    auto characters = quadratic_characters(stabilizer, L);
    std::size_t free_signs = cosets.size() - 1;
    if (characters.size() * (std::size_t{1} << free_signs) > static_cast<std::size_t>(kMaxPatterns))
        throw VerificationError("square-root search space too large for degree " + std::to_string(k.degree()));

    std::vector<Real> nodes;
    for (int j : conj)
        nodes.push_back(k.generator_value<Real>(j));

    for (const auto& chi : characters) {
        for (unsigned long mask = 0; mask < (1ul << free_signs); ++mask) {
            std::map<int, Real> target;
            for (std::size_t t = 0; t < cosets.size(); ++t) {
                int s_t = (t > 0 && ((mask >> (t - 1)) & 1ul)) ? -1 : 1;
                for (int h : stabilizer) {
                    int j = compose(cosets[t], h, L);
                    target[j] = s_t * chi.at(h) * root_value.at(cosets[t]);
                }
            }
            std::vector<Real> rhs;
            for (int j : conj)
                rhs.push_back(target.at(j));
            auto sol = solve_vandermonde(nodes, rhs);
            Coeffs cand(k.degree());
            for (int i = 0; i < k.degree(); ++i)
                cand[i] = best_rational(sol[i], Integer(1000000));
            if (FieldContext::is_zero(k.sub(k.mul(cand, cand), d)) && certified_sign(k, cand) > 0)
                return cand;
        }
    }
    return std::nullopt;
}

}   // namespace

AlgebraicNumber adjoin_sqrt(const AlgebraicNumber& d) {
    if (d.has_extension_part())
        throw DomainError("radicand must lie in the base field");
    const FieldContext& k = *d.context();
    if (d.sign() <= 0)
        throw GeometryError("radicand is not positive: " + d.to_string() + " ~ " + std::to_string(d.approx()));
    if (auto r = find_square_root(k, d.base()))
        return AlgebraicNumber(d.context(), *r);
    auto rad = std::make_shared<const Coeffs>(d.base());
    Coeffs one = k.constant(1);
    return AlgebraicNumber(d.context(), k.zero(), one, rad);
}

}   // namespace rtlink

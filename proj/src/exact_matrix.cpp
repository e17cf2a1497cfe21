#include "rtlink/exact_matrix.hpp"

#include <bit>

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

int sign_variations(const std::vector<int>& signs) {
    int last = 0, count = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

AlgebraicNumber zero_like(const AlgebraicNumber& x) { return AlgebraicNumber::rational(x.context(), 0); }

}   // namespace

AlgebraicNumber determinant(const ExactMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0)
        throw DomainError("determinant of an empty matrix");
    if (n > 16)
        throw DomainError("determinant: matrix too large for subset expansion");
    // f[mask] = signed sum over ways of filling the first |mask| rows with the
    // columns in mask.
    std::vector<std::optional<AlgebraicNumber>> f(std::size_t{1} << n);
    f[0] = AlgebraicNumber::rational(a[0][0].context(), 1);
    for (std::size_t mask = 0; mask < f.size(); ++mask) {
        if (!f[mask] || f[mask]->is_zero())
            continue;
        std::size_t row = std::popcount(mask);
        if (row == n)
            continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (std::size_t{1} << c) || a[row][c].is_zero())
                continue;
            int above = std::popcount(mask >> (c + 1));
            AlgebraicNumber term = *f[mask] * a[row][c];
            if (above % 2)
                term = -term;
            auto& slot = f[mask | (std::size_t{1} << c)];
            slot = slot ? *slot + term : term;
        }
    }
    auto& full = f.back();
    return full ? *full : zero_like(a[0][0]);
}

int exact_rank(const ExactMatrix& a) {
    ExactMatrix m = a;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        AlgebraicNumber inv = m[rank][c].inverse();
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero())
                continue;
            AlgebraicNumber f = m[r][c] * inv;
            for (std::size_t k = c; k < cols; ++k)
                if (!m[rank][k].is_zero())
                    m[r][k] = m[r][k] - f * m[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<AlgebraicNumber> characteristic_polynomial(const ExactMatrix& a) {
    const std::size_t n = a.size();
    const AlgebraicNumber zero = zero_like(a[0][0]);
    std::vector<AlgebraicNumber> coeff(n + 1, zero);
    coeff[n] = AlgebraicNumber::rational(zero.context(), 1);
    ExactMatrix m(n, std::vector<AlgebraicNumber>(n, zero));   // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        ExactMatrix next(n, std::vector<AlgebraicNumber>(n, zero));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                AlgebraicNumber s = zero;
                for (std::size_t l = 0; l < n; ++l)
                    if (!a[i][l].is_zero() && !m[l][j].is_zero())
                        s = s + a[i][l] * m[l][j];
                next[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i)
            next[i][i] = next[i][i] + coeff[n - k + 1];
        m = std::move(next);
        // c_{n-k} = -tr(A M_k) / k
        AlgebraicNumber tr = zero;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (!a[i][l].is_zero() && !m[l][i].is_zero())
                    tr = tr + a[i][l] * m[l][i];
        coeff[n - k] = tr * Rational(-1, static_cast<long>(k));
    }
    return coeff;
}

Signature rank_and_signature(const ExactMatrix& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(a[i][j] == a[j][i]))
                throw DomainError("signature requires a symmetric matrix");

    auto p = characteristic_polynomial(a);
    std::vector<int> pos, neg;
    int zero_roots = 0;
    while (zero_roots <= static_cast<int>(n) && p[zero_roots].is_zero())
        ++zero_roots;
    for (std::size_t i = 0; i <= n; ++i) {
        int s = p[i].sign();
        pos.push_back(s);
        neg.push_back(i % 2 ? -s : s);
    }
    Signature exact;
    exact.positive = sign_variations(pos);
    exact.negative = sign_variations(neg);
    exact.rank = static_cast<int>(n) - zero_roots;

    int r = exact_rank(a);
    if (r != exact.rank || exact.positive + exact.negative != exact.rank)
        throw VerificationError("rank from elimination disagrees with the characteristic polynomial");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_double(a), Eigen::EigenvaluesOnly);
    int np = 0, nn = 0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        double ev = solver.eigenvalues()[i];
        if (ev > 1e-9)
            ++np;
        else if (ev < -1e-9)
            ++nn;
    }
    if (np != exact.positive || nn != exact.negative)
        throw VerificationError("numeric eigenvalue count disagrees with exact signature");
    return exact;
}

Eigen::MatrixXd to_double(const ExactMatrix& a) {
    Eigen::MatrixXd m(a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            m(i, j) = a[i][j].approx();
    return m;
}

ExactMatrix submatrix(const ExactMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    ExactMatrix s;
    for (int r : rows) {
        std::vector<AlgebraicNumber> row;
        for (int c : cols)
            row.push_back(a[r][c]);
        s.push_back(std::move(row));
    }
    return s;
}

}   // namespace rtlink

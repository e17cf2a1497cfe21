#include "rtlink/field.hpp"

#include <numeric>

#include "rtlink/errors.hpp"

namespace rtlink {

FieldContext::FieldContext(int L) : L_(L) {
    if (L < 1)
        throw DomainError("field index L must be positive, got " + std::to_string(L));
    modulus_ = cos_minimal_polynomial(L);
    degree_ = static_cast<int>(modulus_.size()) - 1;
    if (L <= 2) {
        conjugates_ = {1};
    } else {
        for (int j = 1; j < L; j += 2)
            if (std::gcd(j, L) == 1)
                conjugates_.push_back(j);
    }
    if (static_cast<int>(conjugates_.size()) != degree_)
        throw VerificationError("conjugate count does not match degree for L=" + std::to_string(L));
    generator_approx_ = static_cast<double>(generator_value<Real>(1));
}

FieldPtr make_context(int L) { return std::make_shared<const FieldContext>(L); }

bool FieldContext::is_zero(const Coeffs& a) {
    for (const auto& c : a)
        if (c != 0)
            return false;
    return true;
}

bool FieldContext::is_constant(const Coeffs& a) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0)
            return false;
    return true;
}

Coeffs FieldContext::constant(const Rational& q) const {
    Coeffs c(degree_);
    c[0] = q;
    return c;
}

Coeffs FieldContext::reduce(std::vector<Rational> wide) const {
    for (std::size_t k = wide.size(); k-- > static_cast<std::size_t>(degree_);) {
        if (wide[k] == 0)
            continue;
        Rational c = wide[k];
        std::size_t shift = k - degree_;
        for (int i = 0; i < degree_; ++i)
            if (modulus_[i] != 0)
                wide[shift + i] -= c * modulus_[i];
        wide[k] = 0;
    }
    wide.resize(degree_);
    return wide;
}

Coeffs FieldContext::cos_multiple(long j) const {
    long period = 2L * L_;
    j %= period;
    if (j < 0)
        j += period;
    if (j > L_)
        j = period - j;
    Coeffs prev = constant(2);
    if (j == 0)
        return prev;
    Coeffs cur = zero();
    if (degree_ > 1)
        cur[1] = 1;
    else
        cur[0] = -Rational(modulus_[0]);   // g itself is rational here
    for (long k = 1; k < j; ++k) {
        // next = g * cur - prev
        std::vector<Rational> wide(degree_ + 1);
        for (int i = 0; i < degree_; ++i)
            wide[i + 1] = cur[i];
        if (degree_ == 1) {
            wide = {cur[0] * -Rational(modulus_[0])};
        }
        Coeffs next = reduce(std::move(wide));
        for (int i = 0; i < degree_; ++i)
            next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Coeffs FieldContext::add(const Coeffs& a, const Coeffs& b) const {
    Coeffs r(a);
    for (int i = 0; i < degree_; ++i)
        r[i] += b[i];
    return r;
}

Coeffs FieldContext::sub(const Coeffs& a, const Coeffs& b) const {
    Coeffs r(a);
    for (int i = 0; i < degree_; ++i)
        r[i] -= b[i];
    return r;
}

Coeffs FieldContext::scale(const Coeffs& a, const Rational& q) const {
    Coeffs r(a);
    for (auto& c : r)
        c *= q;
    return r;
}

Coeffs FieldContext::mul(const Coeffs& a, const Coeffs& b) const {
    if (degree_ == 1)
        return {a[0] * b[0]};
    std::vector<Rational> wide(2 * degree_ - 1);
    for (int i = 0; i < degree_; ++i) {
        if (a[i] == 0)
            continue;
        for (int k = 0; k < degree_; ++k)
            if (b[k] != 0)
                wide[i + k] += a[i] * b[k];
    }
    return reduce(std::move(wide));
}

Coeffs FieldContext::inverse(const Coeffs& a) const {
    if (is_zero(a))
        throw ArithmeticError("inverse of zero");
    if (is_constant(a))
        return constant(1 / a[0]);
    // Solve M x = e_0 where column i of M is a * g^i.
    const int d = degree_;
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    Coeffs col = a;
    for (int i = 0; i < d; ++i) {
        for (int r = 0; r < d; ++r)
            m[r][i] = col[r];
        std::vector<Rational> wide(d + 1);
        for (int r = 0; r < d; ++r)
            wide[r + 1] = col[r];
        col = reduce(std::move(wide));
    }
    m[0][d] = 1;
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (piv < d && m[piv][c] == 0)
            ++piv;
        if (piv == d)
            throw ArithmeticError("singular multiplication matrix (modulus not irreducible?)");
        std::swap(m[piv], m[c]);
        Rational inv = 1 / m[c][c];
        for (int k = c; k <= d; ++k)
            m[c][k] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rational f = m[r][c];
            for (int k = c; k <= d; ++k)
                if (m[c][k] != 0)
                    m[r][k] -= f * m[c][k];
        }
    }
    Coeffs x(d);
    for (int r = 0; r < d; ++r)
        x[r] = m[r][d];
    return x;
}

Coeffs FieldContext::galois(const Coeffs& a, int j) const {
    Coeffs image = cos_multiple(j);
    Coeffs r = zero();
    for (std::size_t k = a.size(); k-- > 0;) {
        r = mul(r, image);
        r[0] += a[k];
    }
    return r;
}

}   // namespace rtlink

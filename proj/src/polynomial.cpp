#include "rtlink/polynomial.hpp"

#include <sstream>

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

// p <- p * (x^d - 1)
void multiply_binomial(IntPoly& p, int d) {
    IntPoly r(p.size() + d);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + d] += p[i];
        r[i] -= p[i];
    }
    p = std::move(r);
}

// p <- p / (x^d - 1); division must be exact
void divide_binomial(IntPoly& p, int d) {
    // p = q (x^d - 1)  =>  q[i] = q[i-d] - p[i], processed bottom-up.
    std::size_t n = p.size() - d;
    IntPoly q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = -p[i];
        if (i >= static_cast<std::size_t>(d))
            q[i] += q[i - d];
    }
    p = std::move(q);
}

template <class T>
std::string render(const std::vector<T>& p, const std::string& var) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0)
            continue;
        T c = p[k];
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        std::string cs;
        if constexpr (std::is_same_v<T, Rational>)
            cs = to_string(c);
        else
            cs = c.str();
        if (k == 0) {
            out << cs;
        } else {
            if (c != 1)
                out << cs << "*";
            out << var;
            if (k > 1)
                out << "^" << k;
        }
    }
    if (first)
        out << "0";
    return out.str();
}

}   // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

IntPoly cyclotomic(int N) {
    if (N < 1)
        throw DomainError("cyclotomic index must be positive");
    IntPoly p{Integer(1)};
    std::vector<int> down;
    for (int d = 1; d <= N; ++d) {
        if (N % d)
            continue;
        int mu = moebius(N / d);
        if (mu == 1)
            multiply_binomial(p, d);
        else if (mu == -1)
            down.push_back(d);
    }
    for (int d : down)
        divide_binomial(p, d);
    // Sign normalization: prod (x^d - 1)^mu carries (-1)^{sum mu} = monic
    // up to sign for N = 1.
    if (p.back() < 0)
        for (auto& c : p)
            c = -c;
    trim(p);
    return p;
}

IntPoly fold_palindromic(const IntPoly& p) {
    std::size_t deg2 = p.size() - 1;
    if (deg2 % 2)
        throw DomainError("fold_palindromic needs even degree");
    std::size_t d = deg2 / 2;
    for (std::size_t i = 0; i <= deg2; ++i)
        if (p[i] != p[deg2 - i])
            throw DomainError("polynomial is not palindromic");
    // z^k + z^-k = V_k(y), V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1}.
    IntPoly result(d + 1);
    result[0] += p[d];
    IntPoly v_prev{Integer(2)}, v{Integer(0), Integer(1)};
    for (std::size_t k = 1; k <= d; ++k) {
        const Integer& c = p[d + k];
        if (c != 0)
            for (std::size_t i = 0; i < v.size(); ++i)
                result[i] += c * v[i];
        IntPoly v_next(v.size() + 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            v_next[i + 1] += v[i];
        for (std::size_t i = 0; i < v_prev.size(); ++i)
            v_next[i] -= v_prev[i];
        v_prev = std::move(v);
        v = std::move(v_next);
    }
    trim(result);
    return result;
}

IntPoly cos_minimal_polynomial(int L) {
    if (L < 1)
        throw DomainError("L must be positive");
    if (L == 1)
        return {Integer(2), Integer(1)};   // 2cos(pi) = -2
    return fold_palindromic(cyclotomic(2 * L));
}

void trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
}

void trim(RatPoly& p) {
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
}

bool is_integral(const RatPoly& p) {
    for (const auto& c : p)
        if (den(c) != 1)
            return false;
    return true;
}

std::string poly_to_string(const RatPoly& p, const std::string& var) { return render(p, var); }
std::string poly_to_string(const IntPoly& p, const std::string& var) { return render(p, var); }

}   // namespace rtlink

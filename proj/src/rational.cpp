#include "rtlink/rational.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include "rtlink/errors.hpp"
#include "rtlink/numeric.hpp"

namespace rtlink {

std::string to_string(const Rational& q) {
    if (den(q) == 1)
        return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(Integer(text));
    Integer d(text.substr(slash + 1));
    if (d == 0)
        throw DomainError("zero denominator in rational '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), d);
}

SquarefreeDecomposition squarefree_decompose(const Integer& n) {
    if (n == 0)
        throw DomainError("squarefree decomposition of zero");
    Integer rest = abs(n);
    Integer core = 1, root = 1;
    for (unsigned long p = 2; p <= 1000000ul && Integer(p) * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k)
            root *= p;
        if (e % 2)
            core *= p;
    }
    if (rest > 1) {
        Integer s = sqrt(rest);
        if (s * s == rest) {
            root *= s;
        } else if (miller_rabin_test(rest, 30) || rest < Integer("1000000000000000000")) {
            // Prime, or (no factor below 10^6 and below 10^18, not a square)
            // a product of two distinct primes.
            core *= rest;
        } else {
            throw VerificationError("cannot certify squarefree cofactor " + rest.str());
        }
    }
    if (n < 0)
        core = -core;
    return {core, root};
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0)
        return std::nullopt;
    Integer a = num(q), b = den(q);
    Integer ra = sqrt(a), rb = sqrt(b);
    if (ra * ra != a || rb * rb != b)
        return std::nullopt;
    return Rational(ra, rb);
}

Rational best_rational(const Real& x, const Integer& max_den) {
    // Convergents h/k of the continued fraction of x.
    Integer h_prev = 1, h = 0, k_prev = 0, k = 1;
    Real rest = x;
    Rational best(0);
    for (int iter = 0; iter < 200; ++iter) {
        Real fl = floor(rest);
        Integer a = fl.convert_to<Integer>();
        Integer h_next = a * h_prev + h;
        Integer k_next = a * k_prev + k;
        if (k_next > max_den)
            break;
        h = h_prev;
        k = k_prev;
        h_prev = h_next;
        k_prev = k_next;
        best = Rational(h_prev, k_prev);
        Real frac = rest - fl;
        if (frac < Real("1e-100"))
            break;
        rest = 1 / frac;
    }
    return best;
}

}   // namespace rtlink

#ifndef RTLINK_RATIONAL_HPP
#define RTLINK_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>
#include <boost/multiprecision/gmp.hpp>

namespace rtlink {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Coordinates of a base-field element on the powers 1, g, g^2, ... of the
/// field generator.
using Coeffs = std::vector<Rational>;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q" or "p" in lowest terms.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// n = sign * core * root^2 with core squarefree and positive.
struct SquarefreeDecomposition {
    Integer core;   // signed squarefree part
    Integer root;   // n = core * root^2
};

/// Trial division up to 10^6, then a primality test on the cofactor.
/// Throws VerificationError if the cofactor cannot be certified squarefree.
SquarefreeDecomposition squarefree_decompose(const Integer& n);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

}   // namespace rtlink

#endif

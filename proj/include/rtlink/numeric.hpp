#ifndef RTLINK_NUMERIC_HPP
#define RTLINK_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "rtlink/rational.hpp"

namespace rtlink {

/// Working precision for sign decisions and embeddings (~400 bits).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>>;
/// Fallback precision when a Real evaluation is too close to zero to certify.
using RealHigh = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<600>>;

template <class R>
R pi_value() {
    return boost::multiprecision::acos(R(-1));
}

template <class R>
R to_real(const Rational& q) {
    return R(num(q)) / R(den(q));
}

/// Best rational approximation of x with denominator at most max_den,
/// by continued-fraction convergents.
Rational best_rational(const Real& x, const Integer& max_den);

}   // namespace rtlink

#endif

#ifndef RTLINK_POLYNOMIAL_HPP
#define RTLINK_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "rtlink/rational.hpp"

namespace rtlink {

/// Dense integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Integer>;
/// Dense rational polynomial, coefficient of x^i at index i.
using RatPoly = std::vector<Rational>;

/// The N-th cyclotomic polynomial, from prod_{d|N} (x^d - 1)^{mu(N/d)}.
IntPoly cyclotomic(int N);

/// Rewrites a palindromic polynomial p(z) of even degree 2d as q(y) with
/// p(z) = z^d q(z + 1/z).
IntPoly fold_palindromic(const IntPoly& p);

/// Minimal polynomial of 2cos(pi/L).
IntPoly cos_minimal_polynomial(int L);

int euler_phi(int n);

void trim(IntPoly& p);
void trim(RatPoly& p);

bool is_integral(const RatPoly& p);

/// Human-readable form, highest degree first, e.g. "x^2 - x - 1".
std::string poly_to_string(const RatPoly& p, const std::string& var = "x");
std::string poly_to_string(const IntPoly& p, const std::string& var = "x");

}   // namespace rtlink

#endif

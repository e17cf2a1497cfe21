#ifndef RTLINK_FIELD_HPP
#define RTLINK_FIELD_HPP

#include <memory>
#include <vector>

#include "rtlink/numeric.hpp"
#include "rtlink/polynomial.hpp"
#include "rtlink/rational.hpp"

namespace rtlink {

/**
 * The real cyclotomic field K0 = Q(g), g = 2cos(pi/L).
 *
 * Elements of K0 are coordinate vectors on 1, g, ..., g^{d-1}. The context
 * owns the modulus (minimal polynomial of g) and provides the base-field
 * arithmetic that AlgebraicNumber builds on. Immutable after construction.
 */
class FieldContext {
  public:
    explicit FieldContext(int L);

    int L() const { return L_; }
    int degree() const { return degree_; }
    /// Monic integer minimal polynomial of the generator.
    const IntPoly& modulus() const { return modulus_; }
    /// Generator value, double precision.
    double real_embedding() const { return generator_approx_; }

    /// Odd j in [1, 2L) coprime to 2L with j < L: the Galois conjugates of g
    /// are 2cos(j pi / L) for exactly these j (g itself is j = 1).
    const std::vector<int>& conjugate_indices() const { return conjugates_; }

    Coeffs zero() const { return Coeffs(degree_); }
    Coeffs constant(const Rational& q) const;
    /// Exact 2cos(j pi / L) for any integer j, from the recurrence
    /// t_0 = 2, t_1 = g, t_{k+1} = g t_k - t_{k-1}.
    Coeffs cos_multiple(long j) const;

    Coeffs add(const Coeffs& a, const Coeffs& b) const;
    Coeffs sub(const Coeffs& a, const Coeffs& b) const;
    Coeffs mul(const Coeffs& a, const Coeffs& b) const;
    Coeffs scale(const Coeffs& a, const Rational& q) const;
    /// Throws ArithmeticError on zero.
    Coeffs inverse(const Coeffs& a) const;
    /// Image of a under the automorphism g -> 2cos(j pi / L).
    Coeffs galois(const Coeffs& a, int j) const;

    static bool is_zero(const Coeffs& a);
    static bool is_constant(const Coeffs& a);

    /// Value of the element at the conjugate embedding g -> 2cos(j pi/L),
    /// together with sum |c_i| |g_j|^i (for rounding-error bounds).
    template <class R>
    std::pair<R, R> evaluate(const Coeffs& a, int j = 1) const;

    /// Generator value at conjugate j.
    template <class R>
    R generator_value(int j = 1) const;

  private:
    Coeffs reduce(std::vector<Rational> wide) const;

    int L_;
    int degree_;
    IntPoly modulus_;
    double generator_approx_;
    std::vector<int> conjugates_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Q(2cos(pi/L)). For L in {1, 2} the field is Q with generator -2 or 0.
FieldPtr make_context(int L);

template <class R>
R FieldContext::generator_value(int j) const {
    return 2 * boost::multiprecision::cos(pi_value<R>() * j / L_);
}

template <class R>
std::pair<R, R> FieldContext::evaluate(const Coeffs& a, int j) const {
    R g = generator_value<R>(j);
    R ag = abs(g);
    R value = 0, magnitude = 0;
    for (std::size_t k = a.size(); k-- > 0;) {
        value = value * g + to_real<R>(a[k]);
        magnitude = magnitude * ag + abs(to_real<R>(a[k]));
    }
    return {value, magnitude};
}

}   // namespace rtlink

#endif

#ifndef RTLINK_ALGEBRAIC_NUMBER_HPP
#define RTLINK_ALGEBRAIC_NUMBER_HPP

#include <memory>
#include <optional>
#include <string>

#include "rtlink/field.hpp"

namespace rtlink {

/**
 * An exact element a + b*sqrt(D) of K0(sqrt(D)), with a, b, D in K0.
 *
 * Elements without a radicand live in K0. Elements sharing a radicand (equal
 * coefficient vectors) may be combined; combining two different radicands
 * is a domain error. A base element is promoted automatically when it meets
 * an extension element.
 */
class AlgebraicNumber {
  public:
    AlgebraicNumber(FieldPtr ctx, Coeffs base);
    AlgebraicNumber(FieldPtr ctx, Coeffs base, Coeffs ext, std::shared_ptr<const Coeffs> radicand);

    static AlgebraicNumber rational(FieldPtr ctx, const Rational& q);

    const FieldPtr& context() const { return ctx_; }
    const Coeffs& base() const { return base_; }
    /// Coefficient of sqrt(D); empty when the element has no radicand.
    const Coeffs& ext() const { return ext_; }
    bool has_radicand() const { return radicand_ != nullptr; }
    const std::shared_ptr<const Coeffs>& radicand() const { return radicand_; }
    /// True when the sqrt(D) coordinate is present and nonzero.
    bool has_extension_part() const;

    AlgebraicNumber operator-() const;
    AlgebraicNumber inverse() const;

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

    AlgebraicNumber operator*(const Rational& q) const;

    bool is_zero() const;
    /// Exact sign under the real embedding (certified interval evaluation).
    int sign() const;
    /// The rational value when the element lies in Q.
    std::optional<Rational> as_rational() const;

    double approx() const;
    Real value() const;

    /// Monic minimal polynomial over Q.
    RatPoly minimal_polynomial() const;
    bool is_algebraic_integer() const;

    /// Symbolic text: polynomial in g (g = 2cos(pi/L)) plus sqrt part.
    std::string to_string() const;

  private:
    void check_compatible(const AlgebraicNumber& other) const;
    AlgebraicNumber promoted(const std::shared_ptr<const Coeffs>& rad) const;

    FieldPtr ctx_;
    Coeffs base_;
    Coeffs ext_;
    std::shared_ptr<const Coeffs> radicand_;
};

/// 2cos(pi/k) for k dividing L.
AlgebraicNumber embed_cos(const FieldPtr& ctx, int k);

/// Exact sign of a base-field element at conjugate j (j = 1 is the real
/// embedding used everywhere). Returns 0 only for the zero element.
int certified_sign(const FieldContext& ctx, const Coeffs& a, int j = 1);

/// sqrt(D) for D in K0 with D > 0. Returns a base element when D is a square
/// in K0, otherwise the formal extension element.
AlgebraicNumber adjoin_sqrt(const AlgebraicNumber& d);

std::optional<Rational> is_rational(const AlgebraicNumber& x);
RatPoly minimal_polynomial(const AlgebraicNumber& x);
bool is_algebraic_integer(const AlgebraicNumber& x);

}   // namespace rtlink

#endif

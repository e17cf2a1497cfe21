#ifndef RTLINK_EXACT_MATRIX_HPP
#define RTLINK_EXACT_MATRIX_HPP

#include <vector>

#include <Eigen/Dense>

#include "rtlink/algebraic_number.hpp"

namespace rtlink {

using ExactMatrix = std::vector<std::vector<AlgebraicNumber>>;

struct Signature {
    int rank = 0;
    int positive = 0;
    int negative = 0;
};

/// Laplace expansion memoized over column subsets; fine for the <= 8x8
/// matrices that occur here.
AlgebraicNumber determinant(const ExactMatrix& a);

int exact_rank(const ExactMatrix& a);

/// Coefficients of det(t I - A), constant term first (Faddeev-LeVerrier).
std::vector<AlgebraicNumber> characteristic_polynomial(const ExactMatrix& a);

/// Rank and inertia of a symmetric matrix. The exact answer comes from
/// Descartes' rule on the characteristic polynomial (all roots are real);
/// a double-precision eigenvalue count must agree or VerificationError is
/// thrown.
Signature rank_and_signature(const ExactMatrix& a);

Eigen::MatrixXd to_double(const ExactMatrix& a);

ExactMatrix submatrix(const ExactMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols);

}   // namespace rtlink

#endif

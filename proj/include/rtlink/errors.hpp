#ifndef RTLINK_ERRORS_HPP
#define RTLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rtlink {

/// Invalid input: bad (m,n), mismatched fields, division by a non-divisor.
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Input is well formed but the requested geometry does not exist
/// (non-hyperbolic pair, non-positive radicand, wrong signature).
class GeometryError : public DomainError {
  public:
    explicit GeometryError(const std::string& what) : DomainError(what) {}
};

/// Exact arithmetic failure such as inverting zero.
class ArithmeticError : public std::runtime_error {
  public:
    explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computations disagreed, or a certified decision could
/// not be reached. Always surfaced to the caller.
class VerificationError : public std::runtime_error {
  public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}   // namespace rtlink

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace spoly {

/// Bad input to an operation (counts, degrees, radii, mismatched dims).
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Parameter outside the valid domain of a curve.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Numerical failure during evaluation. Base for the more specific kinds below.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Velocity (or a leg, or a central difference) too short to define a direction.
class RegularityError : public NumericError {
public:
    explicit RegularityError(const std::string& what) : NumericError(what) {}
};

/// Curvature too small for a centre of curvature to exist.
class CurvatureSingularity : public NumericError {
public:
    explicit CurvatureSingularity(const std::string& what) : NumericError(what) {}
};

/// A clamped polygon whose knots admit no uniform float representation.
class NoExactFloatForm : public NumericError {
public:
    explicit NoExactFloatForm(const std::string& what) : NumericError(what) {}
};

} // namespace spoly

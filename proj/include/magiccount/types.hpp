#ifndef MAGICCOUNT_TYPES_HPP
#define MAGICCOUNT_TYPES_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace magiccount {

/// Exact scalar for all geometry and interpolation. Always stored in
/// canonical reduced form, so operator== is structural equality.
using Rational = boost::multiprecision::mpq_rational;

/// Arbitrary-precision integer; counts overflow 64 bits quickly.
using Integer = boost::multiprecision::mpz_int;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

class DimensionMismatch : public std::invalid_argument {
  public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Computed polytope dimension disagrees with the closed-form degree;
/// signals a constraint-builder bug.
class DegreeMismatch : public std::logic_error {
  public:
    explicit DegreeMismatch(const std::string& what) : std::logic_error(what) {}
};

/// The DFS node limit was hit; the count is aborted, never truncated.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class InfeasiblePolytope : public std::logic_error {
  public:
    explicit InfeasiblePolytope(const std::string& what) : std::logic_error(what) {}
};

class InsufficientSamples : public std::invalid_argument {
  public:
    explicit InsufficientSamples(const std::string& what) : std::invalid_argument(what) {}
};

/// Interpolated coefficients fail to reproduce held-out samples; the
/// degree or period bound fed to the interpolator is wrong.
class ValidationMismatch : public std::runtime_error {
  public:
    explicit ValidationMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace magiccount

#endif  // MAGICCOUNT_TYPES_HPP

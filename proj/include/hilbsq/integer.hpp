#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hilbsq {

// Expression templates are disabled so the type behaves like a plain value
// inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& n);

/// Returns r with r*r == t when t is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& t);

/// Floor division (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

std::string to_string(const Integer& n);
Integer parse_integer(std::string_view text);

/// Builds an integer matrix from nested initializer rows.
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);
IntVector int_vector(std::initializer_list<long long> entries);

IntMatrix identity_matrix(Eigen::Index n);

}  // namespace hilbsq

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "om/sign_vector.hpp"

namespace om {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or an integer; throws ParseError.
Rational parse_rational(std::string_view token);
std::string to_string(const Rational& q);

template <class Number>
Sign sign_of(const Number& x) {
  return x > 0 ? Sign::Plus : x < 0 ? Sign::Minus : Sign::Zero;
}

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// Rank of a rational matrix by exact Gaussian elimination.
int rank(RationalMatrix rows);

/// Basis of {x : row . x = 0 for every row}.
std::vector<RationalVector> kernel_basis(RationalMatrix rows, int cols);

/// Exact determinant of a square matrix.
Rational determinant(RationalMatrix rows);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace om

#ifndef SERENDIPITY_RATIONAL_LINALG_HPP
#define SERENDIPITY_RATIONAL_LINALG_HPP

#include <vector>

#include "serendipity/rational.hpp"

namespace serendipity {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A X = B exactly by Gaussian elimination; throws on a
/// singular A. A is square, B has the same row count.
RationalMatrix solve_linear(RationalMatrix A, RationalMatrix B);

/// A^{-1} via solve_linear against the identity.
RationalMatrix invert(const RationalMatrix& A);

}  // namespace serendipity

#endif

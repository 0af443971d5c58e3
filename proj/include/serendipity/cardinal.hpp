#ifndef SERENDIPITY_CARDINAL_HPP
#define SERENDIPITY_CARDINAL_HPP

#include <vector>

#include "serendipity/polynomial.hpp"
#include "serendipity/rational.hpp"

namespace serendipity {

/// Cardinal polynomials l_0, ..., l_a of degree <= a on the coordinate
/// sequence t_0, ..., t_a (repetitions allowed), biorthogonal to the
/// confluent conditions D^{rho(k)} . (t_k), where rho(k) is the
/// univariate left multiplicity of t_k:
///     D^{rho(k')} l_k (t_{k'}) = delta_{k,k'}.
/// For distinct coordinates these are the classical Lagrange cardinals;
/// repeated coordinates yield Hermite cardinals.
struct UnivariateCardinalSet {
  std::vector<Rational> coordinates;
  std::vector<int> left_multiplicities;
  std::vector<Polynomial> cardinals;  // one-variable polynomials
};

/// rho(k) = #{ k' < k : t_{k'} = t_k }.
std::vector<int> univariate_left_multiplicities(const std::vector<Rational>& coordinates);

/// Solves the confluent Vandermonde system exactly.
UnivariateCardinalSet univariate_cardinals(const std::vector<Rational>& coordinates);

}  // namespace serendipity

#endif

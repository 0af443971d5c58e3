#include "serendipity/cardinal.hpp"

#include <stdexcept>

#include "serendipity/rational_linalg.hpp"

namespace serendipity {

std::vector<int> univariate_left_multiplicities(const std::vector<Rational>& coordinates) {
  std::vector<int> rho(coordinates.size(), 0);
  for (std::size_t k = 0; k < coordinates.size(); ++k) {
    int count = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (coordinates[i] == coordinates[k]) ++count;
    rho[k] = count;
  }
  return rho;
}

UnivariateCardinalSet univariate_cardinals(const std::vector<Rational>& coordinates) {
  if (coordinates.empty())
    throw std::invalid_argument("univariate_cardinals: at least one coordinate required");
  const std::size_t count = coordinates.size();
  const auto rho = univariate_left_multiplicities(coordinates);

  // Row k: the condition D^{rho(k)} . (t_k) applied to the monomials
  // 1, t, ..., t^a:  M[k][c] = c (c-1) ... (c-rho+1) t_k^{c-rho}.
  RationalMatrix M(count, std::vector<Rational>(count, Rational(0)));
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t c = 0; c < count; ++c) {
      const int order = rho[k];
      if (static_cast<int>(c) < order) continue;
      Rational value(1);
      for (int i = 0; i < order; ++i) value *= static_cast<int>(c) - i;
      for (int i = 0; i < static_cast<int>(c) - order; ++i) value *= coordinates[k];
      M[k][c] = value;
    }
  }

  // Column k of M^{-1} holds the monomial coefficients of l_k.
  const RationalMatrix inv = invert(M);

  UnivariateCardinalSet set;
  set.coordinates = coordinates;
  set.left_multiplicities = rho;
  set.cardinals.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Polynomial l(1);
    for (std::size_t c = 0; c < count; ++c)
      l += Polynomial::monomial(MultiIndex({static_cast<int>(c)}), inv[c][k]);
    set.cardinals.push_back(std::move(l));
  }
  return set;
}

}  // namespace serendipity

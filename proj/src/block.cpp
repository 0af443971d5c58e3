#include "serendipity/block.hpp"

#include <stdexcept>

namespace serendipity {

namespace {

// lift a one-variable polynomial into n variables, acting on x_axis
Polynomial lift(const Polynomial& univariate, int n, int axis) {
  Polynomial out(n);
  for (const auto& [exp, coeff] : univariate.terms()) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(axis)] = exp[0];
    out += Polynomial::monomial(MultiIndex(e), coeff);
  }
  return out;
}

}  // namespace

BlockBasisBuilder::BlockBasisBuilder(const GridCoordinates& coords) : coords_(coords) {}

const UnivariateCardinalSet& BlockBasisBuilder::cardinal_set(int axis, int degree) {
  if (degree < 0 || degree > coords_.order())
    throw std::out_of_range("BlockBasisBuilder: degree out of range");
  const auto key = std::make_pair(axis, degree);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    const auto& full = coords_.axis(axis);
    std::vector<Rational> coordinates(full.begin(), full.begin() + degree + 1);
    it = cache_.emplace(key, univariate_cardinals(coordinates)).first;
  }
  return it->second;
}

Polynomial BlockBasisBuilder::block_basis(const MultiIndex& beta, const MultiIndex& alpha) {
  const int n = coords_.dimension();
  if (beta.dimension() != n || alpha.dimension() != n)
    throw std::invalid_argument("block_basis: index dimension mismatch");
  if (!componentwise_leq(beta, alpha))
    throw std::invalid_argument("block_basis: beta must satisfy beta <= alpha");
  Polynomial product = Polynomial::constant(n, rational(1));
  for (int j = 0; j < n; ++j) {
    const auto& cardinals = cardinal_set(j, alpha[j]).cardinals;
    product = product * lift(cardinals[static_cast<std::size_t>(beta[j])], n, j);
  }
  return product;
}

Polynomial BlockBasisBuilder::block_interpolant(const MultiIndex& alpha,
                                                const std::map<MultiIndex, Rational>& data) {
  Polynomial p(coords_.dimension());
  for (const auto& beta : Block(alpha).members()) {
    const auto it = data.find(beta);
    if (it == data.end())
      throw std::invalid_argument("block_interpolant: missing data for " + beta.to_string());
    if (it->second == 0) continue;
    p += block_basis(beta, alpha) * it->second;
  }
  return p;
}

Polynomial block_basis(const GridCoordinates& coords, const MultiIndex& beta,
                       const MultiIndex& alpha) {
  BlockBasisBuilder builder(coords);
  return builder.block_basis(beta, alpha);
}

Polynomial block_interpolant(const GridCoordinates& coords, const MultiIndex& alpha,
                             const std::map<MultiIndex, Rational>& data) {
  BlockBasisBuilder builder(coords);
  return builder.block_interpolant(alpha, data);
}

}  // namespace serendipity

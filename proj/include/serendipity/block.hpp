#ifndef SERENDIPITY_BLOCK_HPP
#define SERENDIPITY_BLOCK_HPP

#include <map>
#include <vector>

#include "serendipity/cardinal.hpp"
#include "serendipity/grid.hpp"
#include "serendipity/multi_index.hpp"
#include "serendipity/polynomial.hpp"

namespace serendipity {

/// Builds tensor-product basis functions and interpolants on the
/// rectangular blocks B_alpha, caching the univariate cardinal sets per
/// (axis, degree).
class BlockBasisBuilder {
 public:
  explicit BlockBasisBuilder(const GridCoordinates& coords);

  const GridCoordinates& coordinates() const { return coords_; }

  /// The cardinal set on x_{axis,0}, ..., x_{axis,degree}.
  const UnivariateCardinalSet& cardinal_set(int axis, int degree);

  /// phi_{beta,alpha}(x) = prod_j l_{beta_j}(x_j) with l taken from the
  /// axis-j cardinal set of degree alpha_j. Requires beta <= alpha.
  Polynomial block_basis(const MultiIndex& beta, const MultiIndex& alpha);

  /// The tensor-product interpolant p_alpha = sum_{beta in B_alpha}
  /// data(beta) phi_{beta,alpha}; throws when data misses an entry.
  Polynomial block_interpolant(const MultiIndex& alpha,
                               const std::map<MultiIndex, Rational>& data);

 private:
  const GridCoordinates& coords_;
  std::map<std::pair<int, int>, UnivariateCardinalSet> cache_;
};

/// Convenience wrappers for one-off use.
Polynomial block_basis(const GridCoordinates& coords, const MultiIndex& beta,
                       const MultiIndex& alpha);
Polynomial block_interpolant(const GridCoordinates& coords, const MultiIndex& alpha,
                             const std::map<MultiIndex, Rational>& data);

}  // namespace serendipity

#endif

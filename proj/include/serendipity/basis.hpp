#ifndef SERENDIPITY_BASIS_HPP
#define SERENDIPITY_BASIS_HPP

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "serendipity/block.hpp"
#include "serendipity/coefficients.hpp"
#include "serendipity/grid.hpp"
#include "serendipity/lower_set.hpp"
#include "serendipity/polynomial.hpp"

namespace serendipity {

/// The nodal (or Hermite) basis { phi_alpha : alpha in S_r } of the
/// serendipity space on [-1,1]^n, biorthogonal to the interpolation
/// functionals lambda_alpha of the generating grid:
///     lambda_alpha' phi_alpha = delta_{alpha,alpha'}.
class SerendipityBasis {
 public:
  /// Assembles nothing; takes already-built parts. Prefer build_basis.
  SerendipityBasis(GridCoordinates coords, LowerSet index_set, CoefficientTable coefficients,
                   std::map<MultiIndex, Polynomial> functions, std::vector<Functional> functionals);

  int dimension() const { return coords_.dimension(); }
  int order() const { return coords_.order(); }
  const std::string& scheme_name() const { return coords_.scheme_name(); }
  const GridCoordinates& coordinates() const { return coords_; }
  const LowerSet& index_set() const { return index_set_; }
  const CoefficientTable& coefficients() const { return coefficients_; }
  std::size_t size() const { return functions_.size(); }

  const Polynomial& function(const MultiIndex& alpha) const;
  const std::map<MultiIndex, Polynomial>& functions() const { return functions_; }
  /// Aligned with index_set().members().
  const std::vector<Functional>& functionals() const { return functionals_; }

 private:
  GridCoordinates coords_;
  LowerSet index_set_;
  CoefficientTable coefficients_;
  std::map<MultiIndex, Polynomial> functions_;
  std::vector<Functional> functionals_;
};

/// Assembles every basis function by the combination formula
///     phi_beta = sum_{alpha >= beta, c_alpha != 0} c_alpha phi_{beta,alpha}
/// over the nonzero-coefficient blocks.
SerendipityBasis build_basis(int n, int r, const GridScheme& scheme, const Limits& limits = {});
SerendipityBasis build_basis(const GridCoordinates& coords, const Limits& limits = {});

/// Functional data sampled from u: alpha -> lambda_alpha(u).
std::map<MultiIndex, Rational> sample_functionals(const GridCoordinates& coords, const LowerSet& L,
                                                  const Polynomial& u);

/// Interpolant through the basis: sum_alpha data(alpha) phi_alpha.
Polynomial interpolate(const SerendipityBasis& basis, const std::map<MultiIndex, Rational>& data);

/// Interpolant through the combination of block interpolants:
/// sum_alpha c_alpha p_alpha. Produces the identical polynomial.
Polynomial interpolate_blockwise(const GridCoordinates& coords, const CoefficientTable& table,
                                 const std::map<MultiIndex, Rational>& data);

/// The basis of the Hermite (coalesced-midpoint) configuration,
/// re-indexed by face and derivative order: D^rho' phi_{beta,rho}(y_beta')
/// = delta_{beta,beta'} delta_{rho,rho'}. The (beta, rho) <-> alpha
/// bijection is verified during construction.
struct HermiteBasisEntry {
  FaceIndex face;
  MultiIndex derivative;
  MultiIndex source_index;
  Polynomial function;
};

class HermiteBasis {
 public:
  HermiteBasis(int n, int r, std::vector<HermiteBasisEntry> entries);

  int dimension() const { return n_; }
  int order() const { return r_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<HermiteBasisEntry>& entries() const { return entries_; }
  const Polynomial& function(const FaceIndex& face, const MultiIndex& derivative) const;

 private:
  int n_;
  int r_;
  std::vector<HermiteBasisEntry> entries_;  // sorted by (face, derivative)
};

HermiteBasis hermite_basis(int n, int r, const Limits& limits = {});

/// Substitutes the pinned coordinates of the face (x_j = -1 or +1) and
/// keeps the free axes, in increasing axis order. A vertex (d = 0)
/// yields the scalar value instead of a polynomial.
std::variant<Rational, Polynomial> restrict_to_face(const Polynomial& p, const FaceIndex& beta);

/// The coordinate sequences of the free axes of a face (d >= 1); the
/// restriction of a basis to the face is the basis built on these.
GridCoordinates face_coordinates(const GridCoordinates& coords, const FaceIndex& beta);

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;      // worst offender, when failing
  Rational worst_residual; // 0 expected in exact arithmetic
};

struct VerifyReport {
  std::vector<PropertyResult> checks;
  bool all_passed() const;
};

/// Runs the delta-matrix, monomial-reproduction, partition-of-unity,
/// support-containment and face-nesting checks; for small cases also
/// cross-checks the assembled functions against a direct solve of the
/// biorthogonality system.
VerifyReport verify(const SerendipityBasis& basis);

}  // namespace serendipity

#endif

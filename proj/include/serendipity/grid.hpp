#ifndef SERENDIPITY_GRID_HPP
#define SERENDIPITY_GRID_HPP

#include <string>
#include <vector>

#include "serendipity/lower_set.hpp"
#include "serendipity/multi_index.hpp"
#include "serendipity/polynomial.hpp"
#include "serendipity/rational.hpp"

namespace serendipity {

enum class SchemeKind {
  UniformIncreasing,   // x_k = -1 + 2(k-1)/r, k = 2..r
  SymmetricReordered,  // same coordinates, interleaved towards the middle
  HermiteMidpoint,     // x_k = 0, k = 2..r
  Custom,              // explicit interior coordinates per axis
};

/// How the interior grid coordinates of each axis are placed. Every
/// axis has x_{j,0} = -1 and x_{j,1} = +1; the scheme fixes x_{j,k} for
/// k = 2..r, all strictly inside (-1, 1).
class GridScheme {
 public:
  static GridScheme uniform() { return GridScheme(SchemeKind::UniformIncreasing); }
  static GridScheme symmetric() { return GridScheme(SchemeKind::SymmetricReordered); }
  static GridScheme hermite() { return GridScheme(SchemeKind::HermiteMidpoint); }
  /// One list of interior coordinates (k = 2..r, in that order) per
  /// axis. Repeated coordinates are allowed; repetitions turn the
  /// affected functionals into derivative conditions.
  static GridScheme custom(std::vector<std::vector<Rational>> interior_per_axis);

  /// Accepts "uniform", "symmetric", "hermite".
  static GridScheme parse(const std::string& name);

  SchemeKind kind() const { return kind_; }
  std::string name() const;
  const std::vector<std::vector<Rational>>& custom_interior() const { return custom_interior_; }

 private:
  explicit GridScheme(SchemeKind kind) : kind_(kind) {}

  SchemeKind kind_;
  std::vector<std::vector<Rational>> custom_interior_;
};

/// The per-axis coordinate sequences x_{j,k}, j = 1..n, k = 0..r,
/// which determine the grid points x_alpha componentwise.
class GridCoordinates {
 public:
  /// Validates the endpoint convention and that interior coordinates
  /// lie strictly inside (-1, 1).
  GridCoordinates(int n, int r, std::vector<std::vector<Rational>> per_axis,
                  std::string scheme_name);

  int dimension() const { return n_; }
  int order() const { return r_; }
  const std::string& scheme_name() const { return scheme_name_; }
  const Rational& coordinate(int axis, int k) const;
  const std::vector<Rational>& axis(int j) const;

  /// x_alpha = (x_{1,alpha_1}, ..., x_{n,alpha_n}).
  std::vector<Rational> point(const MultiIndex& alpha) const;

  /// rho_j(alpha) = #{ k < alpha_j : x_{j,k} = x_{j,alpha_j} }.
  MultiIndex left_multiplicity(const MultiIndex& alpha) const;

 private:
  int n_;
  int r_;
  std::vector<std::vector<Rational>> coords_;  // [axis][k]
  std::string scheme_name_;
};

GridCoordinates build_coordinates(const GridScheme& scheme, int n, int r,
                                  const Limits& limits = {});

struct Node {
  std::vector<Rational> point;
  MultiIndex source_index;
};

Node node_of(const GridCoordinates& coords, const MultiIndex& alpha);

/// The interpolation functional lambda_alpha u = D^rho(alpha) u(x_alpha).
struct Functional {
  std::vector<Rational> point;
  MultiIndex derivative_order;
  MultiIndex source_index;
};

/// One functional per member of L, in lexicographic index order.
std::vector<Functional> functionals_for(const GridCoordinates& coords, const LowerSet& L);

/// lambda(p) = (D^rho p)(x), exact.
Rational apply_functional(const Functional& lambda, const Polynomial& p);

/// Midpoint y_beta of a face: -1 / +1 on pinned axes, 0 on free axes.
std::vector<Rational> face_midpoint(const FaceIndex& beta);

/// The derivative conditions taken at the midpoint of one face in the
/// Hermite configuration: K_{r,beta} = { rho : |rho| <= r - 2d,
/// rho_j = 0 if beta_j < 2 }, d = dim f_beta.
struct HermiteConditionSet {
  FaceIndex face;
  std::vector<Rational> midpoint;
  std::vector<MultiIndex> orders;  // lexicographic
};

/// One entry per face with a nonempty condition set (r >= 2d), faces in
/// lexicographic order. The total number of conditions equals
/// dim S_r.
std::vector<HermiteConditionSet> hermite_conditions(int n, int r, const Limits& limits = {});

}  // namespace serendipity

#endif

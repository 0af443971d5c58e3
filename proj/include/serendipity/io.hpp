#ifndef SERENDIPITY_IO_HPP
#define SERENDIPITY_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "serendipity/basis.hpp"
#include "serendipity/coefficients.hpp"
#include "serendipity/grid.hpp"
#include "serendipity/polynomial.hpp"

namespace serendipity::io {

using json = nlohmann::json;

// Rational values are serialized as decimal strings ("p" or "p/q") so
// that arbitrary-precision round-trips stay exact.

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, int dimension);

json coefficient_table_to_json(const CoefficientTable& table);
CoefficientTable coefficient_table_from_json(const json& j);

/// {n, r, scheme, coefficient_table, functions: [{index, face,
/// derivative, point, polynomial}]}.
json basis_to_json(const SerendipityBasis& basis);

struct LoadedBasisFunction {
  MultiIndex index;
  FaceIndex face;
  MultiIndex derivative;
  std::vector<Rational> point;
  Polynomial function;
};

struct LoadedBasis {
  int n = 0;
  int r = 0;
  std::string scheme;
  std::vector<LoadedBasisFunction> functions;  // lexicographic index order
};

LoadedBasis basis_from_json(const json& j);

/// Interior coordinates for a custom scheme: a JSON array of per-axis
/// arrays whose entries are exact rationals ("p/q" strings or
/// integers). Floating-point numbers are rejected.
std::vector<std::vector<Rational>> custom_interior_from_json(const json& j);

/// Node layout rows: alpha, point (as doubles) and derivative order.
void write_nodes_csv(std::ostream& os, const GridCoordinates& coords, const LowerSet& L);
json nodes_to_json(const GridCoordinates& coords, const LowerSet& L);

/// Point list: one row of `dimension` comma-separated doubles per
/// point; an optional non-numeric header row and blank lines are
/// skipped.
std::vector<double> read_points_csv(std::istream& is, int dimension);

/// Evaluation rows: point coordinates, function index, value.
void write_eval_csv(std::ostream& os, int dimension,
                    const std::vector<MultiIndex>& function_indices,
                    const std::vector<double>& points_flat, const std::vector<double>& values);

/// Table-1-style text block: one row per m with the values c_{m,k};
/// the leading n is printed on the first row only.
std::string cmk_text(int n);

}  // namespace serendipity::io

#endif

#include "serendipity/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace serendipity {

namespace {

void check_bounds(int n, int r, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  if (r < 1) throw std::invalid_argument("order r must be >= 1");
  if (n > limits.max_n)
    throw std::invalid_argument("dimension n exceeds the configured limit of " +
                                std::to_string(limits.max_n));
  if (r > limits.max_r)
    throw std::invalid_argument("order r exceeds the configured limit of " +
                                std::to_string(limits.max_r));
}

// Interior coordinates x_k, k = 2..r, for one axis.
std::vector<Rational> interior_coordinates(const GridScheme& scheme, int axis, int r) {
  std::vector<Rational> interior(static_cast<std::size_t>(r - 1));
  switch (scheme.kind()) {
    case SchemeKind::UniformIncreasing:
      for (int k = 2; k <= r; ++k) interior[static_cast<std::size_t>(k - 2)] = rational(-r + 2 * (k - 1), r);
      break;
    case SchemeKind::SymmetricReordered:
      // the uniform coordinates, re-ordered so that higher k sits
      // farther from the middle:
      //   x_{r-2s}   =  1 - 2(s+1)/r
      //   x_{r-2s-1} = -1 + 2(s+1)/r
      for (int s = 0; r - 2 * s >= 2; ++s)
        interior[static_cast<std::size_t>(r - 2 * s - 2)] = rational(r - 2 * (s + 1), r);
      for (int s = 0; r - 2 * s - 1 >= 2; ++s)
        interior[static_cast<std::size_t>(r - 2 * s - 3)] = rational(-r + 2 * (s + 1), r);
      break;
    case SchemeKind::HermiteMidpoint:
      std::fill(interior.begin(), interior.end(), Rational(0));
      break;
    case SchemeKind::Custom: {
      const auto& all = scheme.custom_interior();
      if (axis >= static_cast<int>(all.size()))
        throw std::invalid_argument("custom scheme: missing interior coordinates for axis " +
                                    std::to_string(axis + 1));
      const auto& given = all[static_cast<std::size_t>(axis)];
      if (static_cast<int>(given.size()) != r - 1)
        throw std::invalid_argument("custom scheme: axis " + std::to_string(axis + 1) +
                                    " needs exactly " + std::to_string(r - 1) +
                                    " interior coordinates for order " + std::to_string(r));
      interior = given;
      break;
    }
  }
  return interior;
}

}  // namespace

GridScheme GridScheme::custom(std::vector<std::vector<Rational>> interior_per_axis) {
  GridScheme s(SchemeKind::Custom);
  s.custom_interior_ = std::move(interior_per_axis);
  return s;
}

GridScheme GridScheme::parse(const std::string& name) {
  if (name == "uniform") return uniform();
  if (name == "symmetric") return symmetric();
  if (name == "hermite") return hermite();
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected uniform, symmetric or hermite)");
}

std::string GridScheme::name() const {
  switch (kind_) {
    case SchemeKind::UniformIncreasing: return "uniform";
    case SchemeKind::SymmetricReordered: return "symmetric";
    case SchemeKind::HermiteMidpoint: return "hermite";
    case SchemeKind::Custom: return "custom";
  }
  return "?";
}

GridCoordinates::GridCoordinates(int n, int r, std::vector<std::vector<Rational>> per_axis,
                                 std::string scheme_name)
    : n_(n), r_(r), coords_(std::move(per_axis)), scheme_name_(std::move(scheme_name)) {
  if (n_ < 1 || r_ < 1) throw std::invalid_argument("GridCoordinates: n and r must be >= 1");
  if (static_cast<int>(coords_.size()) != n_)
    throw std::invalid_argument("GridCoordinates: one coordinate sequence per axis required");
  for (const auto& axis : coords_) {
    if (static_cast<int>(axis.size()) != r_ + 1)
      throw std::invalid_argument("GridCoordinates: each axis needs r+1 coordinates");
    if (axis[0] != -1 || axis[1] != 1)
      throw std::invalid_argument("GridCoordinates: x_{j,0} = -1 and x_{j,1} = +1 required");
    for (std::size_t k = 2; k < axis.size(); ++k)
      if (axis[k] <= -1 || axis[k] >= 1)
        throw std::invalid_argument(
            "GridCoordinates: interior coordinates must lie strictly inside (-1, 1)");
  }
}

const Rational& GridCoordinates::coordinate(int axis, int k) const {
  if (axis < 0 || axis >= n_) throw std::out_of_range("GridCoordinates: axis out of range");
  if (k < 0 || k > r_) throw std::out_of_range("GridCoordinates: coordinate index out of range");
  return coords_[static_cast<std::size_t>(axis)][static_cast<std::size_t>(k)];
}

const std::vector<Rational>& GridCoordinates::axis(int j) const {
  if (j < 0 || j >= n_) throw std::out_of_range("GridCoordinates: axis out of range");
  return coords_[static_cast<std::size_t>(j)];
}

std::vector<Rational> GridCoordinates::point(const MultiIndex& alpha) const {
  if (alpha.dimension() != n_)
    throw std::invalid_argument("GridCoordinates::point: index dimension mismatch");
  std::vector<Rational> x(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) x[static_cast<std::size_t>(j)] = coordinate(j, alpha[j]);
  return x;
}

MultiIndex GridCoordinates::left_multiplicity(const MultiIndex& alpha) const {
  if (alpha.dimension() != n_)
    throw std::invalid_argument("GridCoordinates::left_multiplicity: index dimension mismatch");
  std::vector<int> rho(static_cast<std::size_t>(n_), 0);
  for (int j = 0; j < n_; ++j) {
    const Rational& here = coordinate(j, alpha[j]);
    int count = 0;
    for (int k = 0; k < alpha[j]; ++k)
      if (coordinate(j, k) == here) ++count;
    rho[static_cast<std::size_t>(j)] = count;
  }
  return MultiIndex(rho);
}

GridCoordinates build_coordinates(const GridScheme& scheme, int n, int r, const Limits& limits) {
  check_bounds(n, r, limits);
  if (scheme.kind() == SchemeKind::Custom &&
      static_cast<int>(scheme.custom_interior().size()) != n)
    throw std::invalid_argument("custom scheme: expected interior coordinates for " +
                                std::to_string(n) + " axes");
  std::vector<std::vector<Rational>> per_axis(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& axis = per_axis[static_cast<std::size_t>(j)];
    axis.reserve(static_cast<std::size_t>(r) + 1);
    axis.push_back(rational(-1));
    axis.push_back(rational(1));
    for (auto& v : interior_coordinates(scheme, j, r)) axis.push_back(std::move(v));
  }
  return GridCoordinates(n, r, std::move(per_axis), scheme.name());
}

Node node_of(const GridCoordinates& coords, const MultiIndex& alpha) {
  return Node{coords.point(alpha), alpha};
}

std::vector<Functional> functionals_for(const GridCoordinates& coords, const LowerSet& L) {
  if (L.dimension() != coords.dimension())
    throw std::invalid_argument("functionals_for: dimension mismatch");
  std::vector<Functional> out;
  out.reserve(L.size());
  for (const auto& alpha : L.members())
    out.push_back(Functional{coords.point(alpha), coords.left_multiplicity(alpha), alpha});
  return out;
}

Rational apply_functional(const Functional& lambda, const Polynomial& p) {
  if (lambda.derivative_order.total_degree() == 0) return p.evaluate(lambda.point);
  return p.derivative(lambda.derivative_order).evaluate(lambda.point);
}

std::vector<Rational> face_midpoint(const FaceIndex& beta) {
  std::vector<Rational> y(static_cast<std::size_t>(beta.dimension()));
  for (int j = 0; j < beta.dimension(); ++j) {
    switch (beta[j]) {
      case 0: y[static_cast<std::size_t>(j)] = rational(-1); break;
      case 1: y[static_cast<std::size_t>(j)] = rational(1); break;
      default: y[static_cast<std::size_t>(j)] = rational(0); break;
    }
  }
  return y;
}

std::vector<HermiteConditionSet> hermite_conditions(int n, int r, const Limits& limits) {
  check_bounds(n, r, limits);
  std::vector<HermiteConditionSet> out;
  for (const auto& beta : all_faces(n)) {
    const int d = beta.face_dim();
    if (r < 2 * d) continue;
    const int budget = r - 2 * d;
    // orders supported on the free axes only, |rho| <= budget
    std::vector<MultiIndex> orders;
    std::vector<int> rho(static_cast<std::size_t>(n), 0);
    // recursive enumeration over free axes, lexicographic
    auto recurse = [&](auto&& self, int axis, int remaining) -> void {
      if (axis == n) {
        orders.emplace_back(rho);
        return;
      }
      if (beta[axis] < 2) {
        rho[static_cast<std::size_t>(axis)] = 0;
        self(self, axis + 1, remaining);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        rho[static_cast<std::size_t>(axis)] = v;
        self(self, axis + 1, remaining - v);
      }
      rho[static_cast<std::size_t>(axis)] = 0;
    };
    recurse(recurse, 0, budget);
    std::sort(orders.begin(), orders.end());
    out.push_back(HermiteConditionSet{beta, face_midpoint(beta), std::move(orders)});
  }
  return out;
}

}  // namespace serendipity

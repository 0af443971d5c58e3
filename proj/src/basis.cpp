#include "serendipity/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "serendipity/rational_linalg.hpp"

namespace serendipity {

SerendipityBasis::SerendipityBasis(GridCoordinates coords, LowerSet index_set,
                                   CoefficientTable coefficients,
                                   std::map<MultiIndex, Polynomial> functions,
                                   std::vector<Functional> functionals)
    : coords_(std::move(coords)),
      index_set_(std::move(index_set)),
      coefficients_(std::move(coefficients)),
      functions_(std::move(functions)),
      functionals_(std::move(functionals)) {
  if (functions_.size() != index_set_.size() || functionals_.size() != index_set_.size())
    throw std::invalid_argument("SerendipityBasis: one function and one functional per index");
}

const Polynomial& SerendipityBasis::function(const MultiIndex& alpha) const {
  const auto it = functions_.find(alpha);
  if (it == functions_.end())
    throw std::out_of_range("SerendipityBasis: no function for " + alpha.to_string());
  return it->second;
}

SerendipityBasis build_basis(int n, int r, const GridScheme& scheme, const Limits& limits) {
  return build_basis(build_coordinates(scheme, n, r, limits), limits);
}

SerendipityBasis build_basis(const GridCoordinates& coords, const Limits& limits) {
  const int n = coords.dimension();
  const int r = coords.order();
  LowerSet sr = serendipity_set(n, r, limits);
  CoefficientTable table = coefficient_table(n, r, limits);
  BlockBasisBuilder blocks(coords);

  std::map<MultiIndex, Polynomial> functions;
  for (const auto& beta : sr.members()) {
    Polynomial phi(n);
    for (const auto& [alpha, c] : table.entries()) {
      if (!componentwise_leq(beta, alpha)) continue;
      phi += blocks.block_basis(beta, alpha) * rational(c);
    }
    functions.emplace(beta, std::move(phi));
  }

  std::vector<Functional> functionals = functionals_for(coords, sr);
  return SerendipityBasis(coords, std::move(sr), std::move(table), std::move(functions),
                          std::move(functionals));
}

std::map<MultiIndex, Rational> sample_functionals(const GridCoordinates& coords, const LowerSet& L,
                                                  const Polynomial& u) {
  std::map<MultiIndex, Rational> data;
  for (const auto& lambda : functionals_for(coords, L))
    data.emplace(lambda.source_index, apply_functional(lambda, u));
  return data;
}

Polynomial interpolate(const SerendipityBasis& basis, const std::map<MultiIndex, Rational>& data) {
  Polynomial p(basis.dimension());
  for (const auto& alpha : basis.index_set().members()) {
    const auto it = data.find(alpha);
    if (it == data.end())
      throw std::invalid_argument("interpolate: missing data for " + alpha.to_string());
    if (it->second == 0) continue;
    p += basis.function(alpha) * it->second;
  }
  return p;
}

Polynomial interpolate_blockwise(const GridCoordinates& coords, const CoefficientTable& table,
                                 const std::map<MultiIndex, Rational>& data) {
  BlockBasisBuilder blocks(coords);
  Polynomial p(coords.dimension());
  for (const auto& [alpha, c] : table.entries())
    p += blocks.block_interpolant(alpha, data) * rational(c);
  return p;
}

HermiteBasis::HermiteBasis(int n, int r, std::vector<HermiteBasisEntry> entries)
    : n_(n), r_(r), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    if (a.face != b.face) return a.face < b.face;
    return a.derivative < b.derivative;
  });
}

const Polynomial& HermiteBasis::function(const FaceIndex& face, const MultiIndex& derivative) const {
  for (const auto& e : entries_)
    if (e.face == face && e.derivative == derivative) return e.function;
  throw std::out_of_range("HermiteBasis: no function for face " + face.to_string() +
                          ", derivative " + derivative.to_string());
}

HermiteBasis hermite_basis(int n, int r, const Limits& limits) {
  SerendipityBasis basis = build_basis(n, r, GridScheme::hermite(), limits);

  // the (beta, rho) <-> alpha bijection: beta = face_of(alpha) and
  // rho = left multiplicity; checked against the K_{r,beta} sets
  std::map<std::pair<FaceIndex, MultiIndex>, bool> expected;
  for (const auto& cond : hermite_conditions(n, r, limits))
    for (const auto& rho : cond.orders) expected.emplace(std::make_pair(cond.face, rho), false);

  std::vector<HermiteBasisEntry> entries;
  entries.reserve(basis.size());
  for (const auto& lambda : basis.functionals()) {
    const FaceIndex beta = face_of(lambda.source_index);
    const auto key = std::make_pair(beta, lambda.derivative_order);
    const auto it = expected.find(key);
    if (it == expected.end() || it->second)
      throw std::runtime_error("hermite_basis: (face, derivative) re-indexing is not a bijection");
    it->second = true;
    entries.push_back(HermiteBasisEntry{beta, lambda.derivative_order, lambda.source_index,
                                        basis.function(lambda.source_index)});
  }
  if (entries.size() != expected.size())
    throw std::runtime_error("hermite_basis: condition count mismatch");
  return HermiteBasis(n, r, std::move(entries));
}

std::variant<Rational, Polynomial> restrict_to_face(const Polynomial& p, const FaceIndex& beta) {
  if (beta.dimension() != p.dimension())
    throw std::invalid_argument("restrict_to_face: dimension mismatch");
  std::vector<std::optional<Rational>> pins(static_cast<std::size_t>(p.dimension()));
  for (int j = 0; j < p.dimension(); ++j) {
    if (beta[j] == 0) pins[static_cast<std::size_t>(j)] = rational(-1);
    else if (beta[j] == 1) pins[static_cast<std::size_t>(j)] = rational(1);
  }
  if (beta.face_dim() == 0) return p.evaluate(face_midpoint(beta));
  return p.substitute_axes(pins);
}

GridCoordinates face_coordinates(const GridCoordinates& coords, const FaceIndex& beta) {
  if (beta.dimension() != coords.dimension())
    throw std::invalid_argument("face_coordinates: dimension mismatch");
  if (beta.face_dim() == 0)
    throw std::invalid_argument("face_coordinates: face must have dimension >= 1");
  std::vector<std::vector<Rational>> axes;
  for (int j = 0; j < coords.dimension(); ++j)
    if (beta[j] == 2) axes.push_back(coords.axis(j));
  return GridCoordinates(beta.face_dim(), coords.order(), std::move(axes), coords.scheme_name());
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

PropertyResult check_delta_matrix(const SerendipityBasis& basis) {
  PropertyResult result{"delta-matrix", true, "", Rational(0)};
  for (const auto& [alpha, phi] : basis.functions()) {
    for (const auto& lambda : basis.functionals()) {
      const Rational expected = lambda.source_index == alpha ? 1 : 0;
      const Rational residual = abs_rational(apply_functional(lambda, phi) - expected);
      if (residual > result.worst_residual) result.worst_residual = residual;
      if (residual != 0 && result.passed) {
        result.passed = false;
        result.detail = "lambda_" + lambda.source_index.to_string() + " phi_" + alpha.to_string();
      }
    }
  }
  return result;
}

PropertyResult check_reproduction(const SerendipityBasis& basis) {
  PropertyResult result{"monomial-reproduction", true, "", Rational(0)};
  for (const auto& gamma : basis.index_set().members()) {
    const Polynomial monomial = Polynomial::monomial(gamma, rational(1));
    const auto data = sample_functionals(basis.coordinates(), basis.index_set(), monomial);
    if (interpolate(basis, data) != monomial) {
      result.passed = false;
      result.detail = "x^" + gamma.to_string() + " is not reproduced";
      result.worst_residual = 1;
      break;
    }
  }
  return result;
}

PropertyResult check_partition_of_unity(const SerendipityBasis& basis) {
  PropertyResult result{"partition-of-unity", true, "", Rational(0)};
  const Polynomial one = Polynomial::constant(basis.dimension(), rational(1));
  const auto data = sample_functionals(basis.coordinates(), basis.index_set(), one);
  Polynomial sum(basis.dimension());
  for (const auto& [alpha, phi] : basis.functions()) sum += phi * data.at(alpha);
  if (sum != one) {
    result.passed = false;
    result.detail = "sum_alpha phi_alpha lambda_alpha(1) != 1";
    result.worst_residual = 1;
  }
  return result;
}

PropertyResult check_support(const SerendipityBasis& basis) {
  PropertyResult result{"support-containment", true, "", Rational(0)};
  for (const auto& [alpha, phi] : basis.functions()) {
    if (!phi.support_in(basis.index_set())) {
      result.passed = false;
      result.detail = "phi_" + alpha.to_string() + " has monomials outside S_r";
      result.worst_residual = 1;
      break;
    }
  }
  return result;
}

PropertyResult check_face_nesting(const SerendipityBasis& basis) {
  PropertyResult result{"face-nesting", true, "", Rational(0)};
  const int n = basis.dimension();
  for (const auto& beta : all_faces(n)) {
    const int d = beta.face_dim();
    if (d == n) continue;  // interior face: restriction is the identity
    if (d == 0) {
      // vertex: every function restricts to its delta value
      for (const auto& [alpha, phi] : basis.functions()) {
        const Rational value = std::get<Rational>(restrict_to_face(phi, beta));
        const Rational expected = face_of(alpha) == beta ? 1 : 0;
        if (value != expected) {
          result.passed = false;
          result.detail = "phi_" + alpha.to_string() + " at vertex " + beta.to_string();
          result.worst_residual = abs_rational(value - expected);
          return result;
        }
      }
      continue;
    }
    const SerendipityBasis sub = build_basis(face_coordinates(basis.coordinates(), beta));
    for (const auto& [alpha, phi] : basis.functions()) {
      const Polynomial restricted = std::get<Polynomial>(restrict_to_face(phi, beta));
      // compatible indices restrict to the face basis, others to zero
      bool compatible = true;
      std::vector<int> sub_entries;
      for (int j = 0; j < n; ++j) {
        if (beta[j] == 2) sub_entries.push_back(alpha[j]);
        else if (alpha[j] != beta[j]) compatible = false;
      }
      const Polynomial expected =
          compatible ? sub.function(MultiIndex(sub_entries)) : Polynomial(d);
      if (restricted != expected) {
        result.passed = false;
        result.detail = "phi_" + alpha.to_string() + " on face " + beta.to_string();
        result.worst_residual = 1;
        return result;
      }
    }
  }
  return result;
}

// Independent construction route for small bases: solve the full
// biorthogonality system over the monomials of S_r and compare.
PropertyResult check_system_solve(const SerendipityBasis& basis) {
  PropertyResult result{"system-solve-crosscheck", true, "", Rational(0)};
  const auto& members = basis.index_set().members();
  const std::size_t dim = members.size();
  RationalMatrix A(dim, std::vector<Rational>(dim));
  for (std::size_t row = 0; row < dim; ++row)
    for (std::size_t col = 0; col < dim; ++col)
      A[row][col] = apply_functional(basis.functionals()[row],
                                     Polynomial::monomial(members[col], rational(1)));
  const RationalMatrix X = invert(A);
  for (std::size_t col = 0; col < dim; ++col) {
    Polynomial phi(basis.dimension());
    for (std::size_t row = 0; row < dim; ++row)
      phi += Polynomial::monomial(members[row], X[row][col]);
    if (phi != basis.function(members[col])) {
      result.passed = false;
      result.detail = "phi_" + members[col].to_string() + " differs from the system solve";
      result.worst_residual = 1;
      return result;
    }
  }
  return result;
}

}  // namespace

VerifyReport verify(const SerendipityBasis& basis) {
  VerifyReport report;
  report.checks.push_back(check_delta_matrix(basis));
  report.checks.push_back(check_reproduction(basis));
  report.checks.push_back(check_partition_of_unity(basis));
  report.checks.push_back(check_support(basis));
  report.checks.push_back(check_face_nesting(basis));
  if (basis.dimension() <= 2 && basis.order() <= 4)
    report.checks.push_back(check_system_solve(basis));
  return report;
}

}  // namespace serendipity

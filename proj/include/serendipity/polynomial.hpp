#ifndef SERENDIPITY_POLYNOMIAL_HPP
#define SERENDIPITY_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "serendipity/lower_set.hpp"
#include "serendipity/multi_index.hpp"
#include "serendipity/rational.hpp"

namespace serendipity {

/// Sparse n-variate polynomial with exact rational coefficients, stored
/// as monomial -> coefficient. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
class Polynomial {
 public:
  explicit Polynomial(int dimension);

  static Polynomial constant(int dimension, Rational value);
  static Polynomial monomial(MultiIndex exponents, Rational coefficient);
  /// x_axis as a polynomial.
  static Polynomial variable(int dimension, int axis);

  int dimension() const { return dimension_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  /// Coefficient of x^exponents; zero when absent.
  Rational coefficient(const MultiIndex& exponents) const;
  /// Largest exponent of x_axis over all terms; 0 for the zero polynomial.
  int degree(int axis) const;
  int total_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// The partial derivative D^order (order applied per axis).
  Polynomial derivative(const MultiIndex& order) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate(const std::vector<double>& point) const;

  /// Pins the axes with a value and drops them; the free axes keep
  /// their relative order. At least one axis must stay free.
  Polynomial substitute_axes(const std::vector<std::optional<Rational>>& pins) const;

  /// True when every monomial exponent lies in L.
  bool support_in(const LowerSet& L) const;

  std::string to_string() const;

 private:
  void add_term(const MultiIndex& exponents, const Rational& coefficient);

  int dimension_ = 0;
  std::map<MultiIndex, Rational> terms_;
};

}  // namespace serendipity

#endif

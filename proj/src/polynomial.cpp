#include "serendipity/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace serendipity {

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
  if (dimension_ < 1) throw std::invalid_argument("Polynomial: dimension must be >= 1");
}

Polynomial Polynomial::constant(int dimension, Rational value) {
  Polynomial p(dimension);
  p.add_term(MultiIndex::zeros(dimension), value);
  return p;
}

Polynomial Polynomial::monomial(MultiIndex exponents, Rational coefficient) {
  Polynomial p(exponents.dimension());
  p.add_term(exponents, coefficient);
  return p;
}

Polynomial Polynomial::variable(int dimension, int axis) {
  return monomial(MultiIndex::unit(dimension, axis), rational(1));
}

Rational Polynomial::coefficient(const MultiIndex& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree(int axis) const {
  if (axis < 0 || axis >= dimension_) throw std::out_of_range("Polynomial::degree: axis");
  int d = 0;
  for (const auto& [exp, coeff] : terms_) d = std::max(d, exp[axis]);
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [exp, coeff] : terms_) d = std::max(d, exp.total_degree());
  return d;
}

void Polynomial::add_term(const MultiIndex& exponents, const Rational& coefficient) {
  if (exponents.dimension() != dimension_)
    throw std::invalid_argument("Polynomial: exponent dimension mismatch");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (dimension_ != other.dimension_)
    throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [exp, coeff] : other.terms_) add_term(exp, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (dimension_ != other.dimension_)
    throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [exp, coeff] : other.terms_) add_term(exp, -coeff);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coeff] : terms_) coeff *= scalar;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out(*this);
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out(*this);
  out -= other;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [exp, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (dimension_ != other.dimension_)
    throw std::invalid_argument("Polynomial: dimension mismatch");
  Polynomial out(dimension_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial out(*this);
  out *= scalar;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return dimension_ == other.dimension_ && terms_ == other.terms_;
}

Polynomial Polynomial::derivative(const MultiIndex& order) const {
  if (order.dimension() != dimension_)
    throw std::invalid_argument("Polynomial::derivative: dimension mismatch");
  Polynomial out(dimension_);
  for (const auto& [exp, coeff] : terms_) {
    Rational c = coeff;
    std::vector<int> e(exp.entries());
    bool vanishes = false;
    for (int j = 0; j < dimension_ && !vanishes; ++j) {
      for (int k = 0; k < order[j]; ++k) {
        if (e[static_cast<std::size_t>(j)] == 0) {
          vanishes = true;
          break;
        }
        c *= e[static_cast<std::size_t>(j)];
        --e[static_cast<std::size_t>(j)];
      }
    }
    if (!vanishes) out.add_term(MultiIndex(e), c);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dimension_)
    throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
  // per-axis power tables; degrees are small
  std::vector<std::vector<Rational>> powers(point.size());
  for (int j = 0; j < dimension_; ++j) {
    const int d = degree(j);
    auto& pj = powers[static_cast<std::size_t>(j)];
    pj.resize(static_cast<std::size_t>(d) + 1);
    pj[0] = 1;
    for (int k = 1; k <= d; ++k) pj[static_cast<std::size_t>(k)] = pj[static_cast<std::size_t>(k - 1)] * point[static_cast<std::size_t>(j)];
  }
  Rational sum(0);
  Rational term;
  for (const auto& [exp, coeff] : terms_) {
    term = coeff;
    for (int j = 0; j < dimension_; ++j) term *= powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(exp[j])];
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != dimension_)
    throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
  double sum = 0.0;
  for (const auto& [exp, coeff] : terms_) {
    double term = to_double(coeff);
    for (int j = 0; j < dimension_; ++j)
      for (int k = 0; k < exp[j]; ++k) term *= point[static_cast<std::size_t>(j)];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute_axes(const std::vector<std::optional<Rational>>& pins) const {
  if (static_cast<int>(pins.size()) != dimension_)
    throw std::invalid_argument("Polynomial::substitute_axes: pin list dimension mismatch");
  std::vector<int> free_axes;
  for (int j = 0; j < dimension_; ++j)
    if (!pins[static_cast<std::size_t>(j)].has_value()) free_axes.push_back(j);
  if (free_axes.empty())
    throw std::invalid_argument("Polynomial::substitute_axes: at least one axis must stay free");

  Polynomial out(static_cast<int>(free_axes.size()));
  for (const auto& [exp, coeff] : terms_) {
    Rational c = coeff;
    for (int j = 0; j < dimension_; ++j) {
      if (!pins[static_cast<std::size_t>(j)]) continue;
      const Rational& v = *pins[static_cast<std::size_t>(j)];
      for (int k = 0; k < exp[j]; ++k) c *= v;
    }
    std::vector<int> e;
    e.reserve(free_axes.size());
    for (int j : free_axes) e.push_back(exp[j]);
    out.add_term(MultiIndex(e), c);
  }
  return out;
}

bool Polynomial::support_in(const LowerSet& L) const {
  for (const auto& [exp, coeff] : terms_)
    if (!L.contains(exp)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [exp, coeff] : terms_) {
    if (!s.empty()) s += " + ";
    s += serendipity::to_string(coeff);
    for (int j = 0; j < dimension_; ++j) {
      if (exp[j] == 0) continue;
      s += "*x" + std::to_string(j + 1);
      if (exp[j] > 1) s += "^" + std::to_string(exp[j]);
    }
  }
  return s;
}

}  // namespace serendipity

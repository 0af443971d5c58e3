#include "serendipity/coefficients.hpp"

#include <stdexcept>
#include <string>

#include "serendipity/combinatorics.hpp"

namespace serendipity {

std::int64_t coeff_oracle(const LowerSet& L, const MultiIndex& alpha) {
  if (!L.contains(alpha))
    throw std::invalid_argument("coeff_oracle: " + alpha.to_string() + " is not in L");
  const int n = L.dimension();
  std::int64_t sum = 0;
  for (std::int64_t bits = 0; bits < (std::int64_t{1} << n); ++bits) {
    std::vector<int> shifted(alpha.entries());
    int parity = 0;
    for (int j = 0; j < n; ++j) {
      if (bits >> j & 1) {
        ++shifted[static_cast<std::size_t>(j)];
        parity ^= 1;
      }
    }
    if (L.contains(MultiIndex(shifted))) sum += parity ? -1 : 1;
  }
  return sum;
}

std::int64_t cmk_value(int n, int m, int k) {
  if (n < 1) throw std::invalid_argument("cmk_value: n must be >= 1");
  if (m < 0 || m >= n) throw std::invalid_argument("cmk_value: m must satisfy 0 <= m < n");
  if (k < 0) throw std::invalid_argument("cmk_value: k must be >= 0");
  std::int64_t sum = 0;
  for (int i = 0; i <= m; ++i) {
    const std::int64_t term = checked_mul(binomial(m, i), binomial(n - m - 1, k - 2 * i));
    sum = checked_add(sum, ((k + i) % 2 == 0) ? term : -term);
  }
  return sum;
}

std::vector<std::vector<std::int64_t>> cmk_table(int n) {
  if (n < 1) throw std::invalid_argument("cmk_table: n must be >= 1");
  std::vector<std::vector<std::int64_t>> table;
  table.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    std::vector<std::int64_t> row;
    row.reserve(static_cast<std::size_t>(n + m));
    for (int k = 0; k < n + m; ++k) row.push_back(cmk_value(n, m, k));
    table.push_back(std::move(row));
  }
  return table;
}

std::int64_t coeff_closed_form(int n, int r, const MultiIndex& alpha) {
  if (n < 1 || r < 1) throw std::invalid_argument("coeff_closed_form: n and r must be >= 1");
  if (alpha.dimension() != n)
    throw std::invalid_argument("coeff_closed_form: index dimension mismatch");
  const int superlinear = alpha.superlinear_degree();
  if (superlinear > r)
    throw std::invalid_argument("coeff_closed_form: " + alpha.to_string() + " is not in S_r");
  if (alpha.multiplicity(0) >= 1) return 0;
  const int m = alpha.multiplicity(1);
  const int k = r - superlinear;
  // boundary test for all-positive alpha: |alpha|' > r - (n + m_1)
  if (k >= n + m) return 0;
  if (m == n)  // alpha = (1,...,1); boundary exactly when r < 2n
    return ((r / 2) % 2 == 0 ? 1 : -1) * binomial(n - 1, r / 2);
  return cmk_value(n, m, k);
}

CoefficientTable::CoefficientTable(int n, int r, std::map<MultiIndex, std::int64_t> entries)
    : n_(n), r_(r), entries_(std::move(entries)) {
  for (const auto& [alpha, value] : entries_) {
    if (alpha.dimension() != n_)
      throw std::invalid_argument("CoefficientTable: index dimension mismatch");
    if (value == 0) throw std::invalid_argument("CoefficientTable: zero entries must be omitted");
  }
}

std::int64_t CoefficientTable::coefficient(const MultiIndex& alpha) const {
  const auto it = entries_.find(alpha);
  return it == entries_.end() ? 0 : it->second;
}

namespace {

// all-positive candidates: entries are 1 or superlinear values 2..r,
// with the running superlinear degree capped by r
void enumerate_positive(int n, int r, int axis, int superlinear_used, std::vector<int>& current,
                        std::map<MultiIndex, std::int64_t>& out) {
  if (axis == n) {
    const MultiIndex alpha(current);
    const std::int64_t c = coeff_closed_form(n, r, alpha);
    if (c != 0) out.emplace(alpha, c);
    return;
  }
  current[static_cast<std::size_t>(axis)] = 1;  // linear, costs no budget
  enumerate_positive(n, r, axis + 1, superlinear_used, current, out);
  for (int v = 2; v <= r - superlinear_used; ++v) {
    current[static_cast<std::size_t>(axis)] = v;
    enumerate_positive(n, r, axis + 1, superlinear_used + v, current, out);
  }
}

}  // namespace

CoefficientTable coefficient_table(int n, int r, const Limits& limits) {
  if (n < 1 || r < 1) throw std::invalid_argument("coefficient_table: n and r must be >= 1");
  if (n > limits.max_n || r > limits.max_r)
    throw std::invalid_argument("coefficient_table: n or r exceeds the configured limits");
  std::map<MultiIndex, std::int64_t> entries;
  std::vector<int> current(static_cast<std::size_t>(n), 1);
  enumerate_positive(n, r, 0, 0, current, entries);
  return CoefficientTable(n, r, std::move(entries));
}

}  // namespace serendipity

#ifndef SERENDIPITY_COEFFICIENTS_HPP
#define SERENDIPITY_COEFFICIENTS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "serendipity/lower_set.hpp"
#include "serendipity/multi_index.hpp"

namespace serendipity {

/// c_alpha by the generic alternating sum over the 2^n unit shifts,
///     c_alpha = sum_{eps in {0,1}^n} (-1)^|eps| chi(L)(alpha + eps).
/// Works for any lower set; throws when alpha is not in L.
std::int64_t coeff_oracle(const LowerSet& L, const MultiIndex& alpha);

/// c_{m,k} = sum_i (-1)^(k+i) C(m,i) C(n-m-1, k-2i), valid for
/// m = m_1(alpha) < n and k = r - |alpha|'.
std::int64_t cmk_value(int n, int m, int k);

/// The c_{m,k} values, rows m = 0..n-1, row m covering k = 0..n+m-1.
std::vector<std::vector<std::int64_t>> cmk_table(int n);

/// c_alpha for L = S_r without touching the 2^n shifts:
///  - 0 when alpha has a zero entry, or when alpha is interior
///    (|alpha|' <= r - (n + m_1) for all-positive alpha);
///  - the special case alpha = (1,...,1): (-1)^floor(r/2) C(n-1, floor(r/2))
///    when r < 2n;
///  - otherwise c_{m,k} with m = m_1(alpha), k = r - |alpha|'.
/// Throws when alpha is not in S_r.
std::int64_t coeff_closed_form(int n, int r, const MultiIndex& alpha);

/// The nonzero combination coefficients for L = S_r.
class CoefficientTable {
 public:
  CoefficientTable(int n, int r, std::map<MultiIndex, std::int64_t> entries);

  int dimension() const { return n_; }
  int order() const { return r_; }
  /// c_alpha; zero when alpha is not in the stored support.
  std::int64_t coefficient(const MultiIndex& alpha) const;
  const std::map<MultiIndex, std::int64_t>& entries() const { return entries_; }

 private:
  int n_;
  int r_;
  std::map<MultiIndex, std::int64_t> entries_;  // nonzero values only
};

/// Enumerates the candidate support (all-positive indices with
/// |alpha|' = r - k, k = 0..n+m_1-1) and fills values from the closed
/// forms. Identical to running coeff_oracle over all of S_r.
CoefficientTable coefficient_table(int n, int r, const Limits& limits = {});

}  // namespace serendipity

#endif

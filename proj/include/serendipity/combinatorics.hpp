#ifndef SERENDIPITY_COMBINATORICS_HPP
#define SERENDIPITY_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>

namespace serendipity {

// Counts, dimensions and combination coefficients are kept in 64-bit
// integers; every multiplication and addition is overflow-checked and
// throws instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in addition");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

/// Binomial coefficient C(l, j) with the convention that C(l, j) = 0
/// for j < 0 or j > l. Requires l >= 0.
inline std::int64_t binomial(std::int64_t l, std::int64_t j) {
  if (l < 0) throw std::invalid_argument("binomial: l must be non-negative");
  if (j < 0 || j > l) return 0;
  if (j > l - j) j = l - j;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= j; ++i) {
    // exact at every step: result holds C(l - j + i - 1, i - 1) * (l-j+i)
    result = checked_mul(result, l - j + i) / i;
  }
  return result;
}

/// 2^e for e >= 0, overflow-checked.
inline std::int64_t pow2(int e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  if (e >= 63) throw std::overflow_error("pow2: exponent too large");
  return std::int64_t{1} << e;
}

}  // namespace serendipity

#endif

#include "serendipity/rational_linalg.hpp"

#include <stdexcept>

namespace serendipity {

RationalMatrix solve_linear(RationalMatrix A, RationalMatrix B) {
  const std::size_t n = A.size();
  if (B.size() != n) throw std::invalid_argument("solve_linear: row count mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("solve_linear: A must be square");
  const std::size_t m = n == 0 ? 0 : B[0].size();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && A[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("solve_linear: singular matrix");
    if (pivot != col) {
      std::swap(A[pivot], A[col]);
      std::swap(B[pivot], B[col]);
    }
    const Rational inv_pivot = 1 / A[col][col];
    for (std::size_t j = col; j < n; ++j) A[col][j] *= inv_pivot;
    for (std::size_t j = 0; j < m; ++j) B[col][j] *= inv_pivot;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || A[row][col] == 0) continue;
      const Rational factor = A[row][col];
      for (std::size_t j = col; j < n; ++j) A[row][j] -= factor * A[col][j];
      for (std::size_t j = 0; j < m; ++j) B[row][j] -= factor * B[col][j];
    }
  }
  return B;
}

RationalMatrix invert(const RationalMatrix& A) {
  const std::size_t n = A.size();
  RationalMatrix identity(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
  return solve_linear(A, identity);
}

}  // namespace serendipity

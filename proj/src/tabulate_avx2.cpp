// AVX2 variant of the batch evaluation kernel: four points per
// instruction, same power-table-then-accumulate structure as the scalar
// reference. This translation unit is compiled with -mavx2 and must
// only be entered after the runtime CPU check.

#include "tabulate_kernels.hpp"

#if defined(SERENDIPITY_HAVE_AVX2_KERNEL)

#include <immintrin.h>

#include <algorithm>
#include <vector>

namespace serendipity::tabulate::detail {

void evaluate_avx2(const std::vector<CompiledPolynomial>& polys, const double* points,
                   std::size_t point_count, double* out) {
  const std::size_t n = static_cast<std::size_t>(polys.front().dimension);
  int max_degree = 0;
  for (const auto& p : polys) max_degree = std::max(max_degree, p.max_degree);
  const std::size_t stride = static_cast<std::size_t>(max_degree) + 1;

  // power table: 4 lanes per (axis, degree) entry
  std::vector<double> powers(n * stride * 4);
  std::size_t pt = 0;
  for (; pt + 4 <= point_count; pt += 4) {
    for (std::size_t j = 0; j < n; ++j) {
      const __m256d xj = _mm256_set_pd(points[(pt + 3) * n + j], points[(pt + 2) * n + j],
                                       points[(pt + 1) * n + j], points[pt * n + j]);
      __m256d power = _mm256_set1_pd(1.0);
      _mm256_storeu_pd(&powers[j * stride * 4], power);
      for (std::size_t k = 1; k < stride; ++k) {
        power = _mm256_mul_pd(power, xj);
        _mm256_storeu_pd(&powers[(j * stride + k) * 4], power);
      }
    }
    for (std::size_t f = 0; f < polys.size(); ++f) {
      const auto& p = polys[f];
      __m256d acc = _mm256_setzero_pd();
      const int* exp = p.exponents.data();
      for (std::size_t t = 0; t < p.term_count(); ++t, exp += n) {
        __m256d prod = _mm256_set1_pd(p.coefficients[t]);
        for (std::size_t j = 0; j < n; ++j)
          prod = _mm256_mul_pd(
              prod, _mm256_loadu_pd(&powers[(j * stride + static_cast<std::size_t>(exp[j])) * 4]));
        acc = _mm256_add_pd(acc, prod);
      }
      _mm256_storeu_pd(out + f * point_count + pt, acc);
    }
  }

  // scalar tail, same operation order
  if (pt < point_count) {
    std::vector<double> tail_powers(n * stride);
    for (; pt < point_count; ++pt) {
      const double* x = points + pt * n;
      for (std::size_t j = 0; j < n; ++j) {
        tail_powers[j * stride] = 1.0;
        for (std::size_t k = 1; k < stride; ++k)
          tail_powers[j * stride + k] = tail_powers[j * stride + k - 1] * x[j];
      }
      for (std::size_t f = 0; f < polys.size(); ++f) {
        const auto& p = polys[f];
        double acc = 0.0;
        const int* exp = p.exponents.data();
        for (std::size_t t = 0; t < p.term_count(); ++t, exp += n) {
          double prod = p.coefficients[t];
          for (std::size_t j = 0; j < n; ++j)
            prod *= tail_powers[j * stride + static_cast<std::size_t>(exp[j])];
          acc += prod;
        }
        out[f * point_count + pt] = acc;
      }
    }
  }
}

}  // namespace serendipity::tabulate::detail

#endif

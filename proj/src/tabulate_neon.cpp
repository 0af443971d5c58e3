// NEON variant of the batch evaluation kernel: two points per
// instruction, same structure as the scalar reference. Built on
// aarch64 only.

#include "tabulate_kernels.hpp"

#if defined(SERENDIPITY_HAVE_NEON_KERNEL)

#include <arm_neon.h>

#include <algorithm>
#include <vector>

namespace serendipity::tabulate::detail {

void evaluate_neon(const std::vector<CompiledPolynomial>& polys, const double* points,
                   std::size_t point_count, double* out) {
  const std::size_t n = static_cast<std::size_t>(polys.front().dimension);
  int max_degree = 0;
  for (const auto& p : polys) max_degree = std::max(max_degree, p.max_degree);
  const std::size_t stride = static_cast<std::size_t>(max_degree) + 1;

  std::vector<float64x2_t> powers(n * stride);
  std::size_t pt = 0;
  for (; pt + 2 <= point_count; pt += 2) {
    for (std::size_t j = 0; j < n; ++j) {
      float64x2_t xj = vdupq_n_f64(points[pt * n + j]);
      xj = vsetq_lane_f64(points[(pt + 1) * n + j], xj, 1);
      powers[j * stride] = vdupq_n_f64(1.0);
      for (std::size_t k = 1; k < stride; ++k)
        powers[j * stride + k] = vmulq_f64(powers[j * stride + k - 1], xj);
    }
    for (std::size_t f = 0; f < polys.size(); ++f) {
      const auto& p = polys[f];
      float64x2_t acc = vdupq_n_f64(0.0);
      const int* exp = p.exponents.data();
      for (std::size_t t = 0; t < p.term_count(); ++t, exp += n) {
        float64x2_t prod = vdupq_n_f64(p.coefficients[t]);
        for (std::size_t j = 0; j < n; ++j)
          prod = vmulq_f64(prod, powers[j * stride + static_cast<std::size_t>(exp[j])]);
        acc = vaddq_f64(acc, prod);
      }
      vst1q_f64(out + f * point_count + pt, acc);
    }
  }

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

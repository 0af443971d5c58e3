#ifndef SERENDIPITY_TABULATE_KERNELS_HPP
#define SERENDIPITY_TABULATE_KERNELS_HPP

// Internal kernel entry points. Each kernel evaluates every polynomial
// at every point with the same operation order per point: per-axis
// power tables first, then coefficient * product accumulation in term
// order. The SIMD variants differ from the scalar reference only in
// processing several points per instruction.

#include <cstddef>
#include <vector>

#include "serendipity/tabulate.hpp"

namespace serendipity::tabulate::detail {

void evaluate_scalar(const std::vector<CompiledPolynomial>& polys, const double* points,
                     std::size_t point_count, double* out);

#if defined(__x86_64__) || defined(_M_X64)
#define SERENDIPITY_HAVE_AVX2_KERNEL 1
void evaluate_avx2(const std::vector<CompiledPolynomial>& polys, const double* points,
                   std::size_t point_count, double* out);
#endif

#if defined(__aarch64__)
#define SERENDIPITY_HAVE_NEON_KERNEL 1
void evaluate_neon(const std::vector<CompiledPolynomial>& polys, const double* points,
                   std::size_t point_count, double* out);
#endif

}  // namespace serendipity::tabulate::detail

#endif

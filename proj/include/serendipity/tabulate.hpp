#ifndef SERENDIPITY_TABULATE_HPP
#define SERENDIPITY_TABULATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "serendipity/polynomial.hpp"

namespace serendipity::tabulate {

/// Double-precision form of a polynomial, flattened for bulk
/// evaluation. Obtained from the exact rational representation by
/// coefficient conversion; never built in floating point directly.
struct CompiledPolynomial {
  int dimension = 0;
  int max_degree = 0;                // max exponent over all axes
  std::vector<double> coefficients;  // one per term
  std::vector<int> exponents;        // term-major, dimension ints per term
  std::size_t term_count() const { return coefficients.size(); }
};

CompiledPolynomial compile(const Polynomial& p);

/// Evaluation kernels. Scalar is the reference; the SIMD variants are
/// selected at runtime and produce the same results (identical
/// operation order per point).
enum class Kernel { Auto, Scalar, Avx2, Neon };

bool kernel_available(Kernel kernel);
/// Auto resolves to the best kernel the CPU supports.
Kernel resolve_kernel(Kernel kernel);
std::string kernel_name(Kernel kernel);
Kernel parse_kernel(const std::string& name);

/// Evaluates every polynomial at every point. points is point-major
/// (point_count x dimension); out is polynomial-major
/// (polys.size() x point_count).
void evaluate_batch(const std::vector<CompiledPolynomial>& polys, const double* points,
                    std::size_t point_count, double* out, Kernel kernel = Kernel::Auto);

std::vector<double> evaluate_batch(const std::vector<CompiledPolynomial>& polys,
                                   const std::vector<double>& points_flat,
                                   Kernel kernel = Kernel::Auto);

}  // namespace serendipity::tabulate

#endif

#include "serendipity/tabulate.hpp"

#include <algorithm>
#include <stdexcept>

#include "tabulate_kernels.hpp"

namespace serendipity::tabulate {

CompiledPolynomial compile(const Polynomial& p) {
  CompiledPolynomial out;
  out.dimension = p.dimension();
  out.coefficients.reserve(p.term_count());
  out.exponents.reserve(p.term_count() * static_cast<std::size_t>(p.dimension()));
  for (const auto& [exp, coeff] : p.terms()) {
    out.coefficients.push_back(to_double(coeff));
    for (int j = 0; j < p.dimension(); ++j) {
      out.exponents.push_back(exp[j]);
      out.max_degree = std::max(out.max_degree, exp[j]);
    }
  }
  return out;
}

bool kernel_available(Kernel kernel) {
  switch (kernel) {
    case Kernel::Auto:
    case Kernel::Scalar:
      return true;
    case Kernel::Avx2:
#if defined(SERENDIPITY_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Kernel::Neon:
#if defined(SERENDIPITY_HAVE_NEON_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Kernel resolve_kernel(Kernel kernel) {
  if (kernel != Kernel::Auto) return kernel;
  if (kernel_available(Kernel::Avx2)) return Kernel::Avx2;
  if (kernel_available(Kernel::Neon)) return Kernel::Neon;
  return Kernel::Scalar;
}

std::string kernel_name(Kernel kernel) {
  switch (kernel) {
    case Kernel::Auto: return "auto";
    case Kernel::Scalar: return "scalar";
    case Kernel::Avx2: return "avx2";
    case Kernel::Neon: return "neon";
  }
  return "?";
}

Kernel parse_kernel(const std::string& name) {
  if (name == "auto") return Kernel::Auto;
  if (name == "scalar") return Kernel::Scalar;
  if (name == "avx2") return Kernel::Avx2;
  if (name == "neon") return Kernel::Neon;
  throw std::invalid_argument("unknown kernel '" + name + "'");
}

void evaluate_batch(const std::vector<CompiledPolynomial>& polys, const double* points,
                    std::size_t point_count, double* out, Kernel kernel) {
  if (polys.empty() || point_count == 0) return;
  const int n = polys.front().dimension;
  for (const auto& p : polys)
    if (p.dimension != n)
      throw std::invalid_argument("evaluate_batch: mixed polynomial dimensions");

  const Kernel resolved = resolve_kernel(kernel);
  if (!kernel_available(resolved))
    throw std::runtime_error("evaluate_batch: kernel '" + kernel_name(resolved) +
                             "' is not available on this CPU");
  switch (resolved) {
#if defined(SERENDIPITY_HAVE_AVX2_KERNEL)
    case Kernel::Avx2:
      detail::evaluate_avx2(polys, points, point_count, out);
      return;
#endif
#if defined(SERENDIPITY_HAVE_NEON_KERNEL)
    case Kernel::Neon:
      detail::evaluate_neon(polys, points, point_count, out);
      return;
#endif
    default:
      detail::evaluate_scalar(polys, points, point_count, out);
      return;
  }
}

std::vector<double> evaluate_batch(const std::vector<CompiledPolynomial>& polys,
                                   const std::vector<double>& points_flat, Kernel kernel) {
  if (polys.empty()) return {};
  const std::size_t n = static_cast<std::size_t>(polys.front().dimension);
  if (points_flat.size() % n != 0)
    throw std::invalid_argument("evaluate_batch: point buffer is not a multiple of the dimension");
  const std::size_t point_count = points_flat.size() / n;
  std::vector<double> out(polys.size() * point_count);
  evaluate_batch(polys, points_flat.data(), point_count, out.data(), kernel);
  return out;
}

namespace detail {

void evaluate_scalar(const std::vector<CompiledPolynomial>& polys, const double* points,
                     std::size_t point_count, double* out) {
  const std::size_t n = static_cast<std::size_t>(polys.front().dimension);
  int max_degree = 0;
  for (const auto& p : polys) max_degree = std::max(max_degree, p.max_degree);
  const std::size_t stride = static_cast<std::size_t>(max_degree) + 1;

  std::vector<double> powers(n * stride);
  for (std::size_t pt = 0; pt < point_count; ++pt) {
    const double* x = points + pt * n;
    for (std::size_t j = 0; j < n; ++j) {
      powers[j * stride] = 1.0;
      for (std::size_t k = 1; k < stride; ++k) powers[j * stride + k] = powers[j * stride + k - 1] * x[j];
    }
    for (std::size_t f = 0; f < polys.size(); ++f) {
      const auto& p = polys[f];
      double acc = 0.0;
      const int* exp = p.exponents.data();
      for (std::size_t t = 0; t < p.term_count(); ++t, exp += n) {
        double prod = p.coefficients[t];
        for (std::size_t j = 0; j < n; ++j) prod *= powers[j * stride + static_cast<std::size_t>(exp[j])];
        acc += prod;
      }
      out[f * point_count + pt] = acc;
    }
  }
}

}  // namespace detail

}  // namespace serendipity::tabulate

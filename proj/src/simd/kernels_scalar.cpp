#include "axial/simd/kernels.hpp"

namespace axial::simd {
namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void xor_signed_axpy_scalar(double a, const double* sign, const double* y, std::uint32_t blade, double* c,
                            std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) c[k] += a * sign[k] * y[k ^ blade];
}

void stencil5_scalar(const double* fm2, const double* fm1, const double* fp1, const double* fp2, double inv_12h,
                     double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = ((fm2[i] - fp2[i]) + 8.0 * (fp1[i] - fm1[i])) * inv_12h;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, axpy_scalar, dot_scalar, xor_signed_axpy_scalar, stencil5_scalar};
  return table;
}

}  // namespace axial::simd

// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include <immintrin.h>

#include "axial/simd/kernels.hpp"

namespace axial::simd::detail {
namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void xor_signed_axpy_avx2(double a, const double* sign, const double* y, std::uint32_t blade, double* c,
                          std::size_t n) {
  std::size_t k = 0;
  if (n >= 4) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256i vblade = _mm256_set1_epi64x(static_cast<long long>(blade));
    __m256i idx = _mm256_set_epi64x(3, 2, 1, 0);
    const __m256i step = _mm256_set1_epi64x(4);
    for (; k + 4 <= n; k += 4) {
      const __m256d vy = _mm256_i64gather_pd(y, _mm256_xor_si256(idx, vblade), 8);
      const __m256d scaled = _mm256_mul_pd(va, _mm256_loadu_pd(sign + k));
      _mm256_storeu_pd(c + k, _mm256_fmadd_pd(scaled, vy, _mm256_loadu_pd(c + k)));
      idx = _mm256_add_epi64(idx, step);
    }
  }
  for (; k < n; ++k) c[k] += a * sign[k] * y[k ^ blade];
}

void stencil5_avx2(const double* fm2, const double* fm1, const double* fp1, const double* fp2, double inv_12h,
                   double* out, std::size_t n) {
  const __m256d eight = _mm256_set1_pd(8.0);
  const __m256d scale = _mm256_set1_pd(inv_12h);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d outer = _mm256_sub_pd(_mm256_loadu_pd(fm2 + i), _mm256_loadu_pd(fp2 + i));
    const __m256d inner = _mm256_sub_pd(_mm256_loadu_pd(fp1 + i), _mm256_loadu_pd(fm1 + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_fmadd_pd(eight, inner, outer), scale));
  }
  for (; i < n; ++i) out[i] = ((fm2[i] - fp2[i]) + 8.0 * (fp1[i] - fm1[i])) * inv_12h;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::Avx2, axpy_avx2, dot_avx2, xor_signed_axpy_avx2, stencil5_avx2};
  return table;
}

}  // namespace axial::simd::detail

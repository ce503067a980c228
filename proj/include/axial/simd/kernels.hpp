#pragma once

// Dense double kernels used by the numeric (float-mode) multivector path.
//
// Every kernel has a portable scalar reference in kernels_scalar.cpp and an
// AVX2+FMA variant in kernels_avx2.cpp. The variant is picked once at
// startup from CPUID; AXIAL_SIMD=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace axial::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;

  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);

  // sum x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);

  // c[k] += a * sign[k] * y[k ^ blade] for k < n; n is a power of two and
  // blade < n. One row of the geometric product for a fixed left blade.
  void (*xor_signed_axpy)(double a, const double* sign, const double* y, std::uint32_t blade, double* c,
                          std::size_t n);

  // out[i] = (fm2[i] - 8 fm1[i] + 8 fp1[i] - fp2[i]) * inv_12h
  void (*stencil5)(const double* fm2, const double* fm1, const double* fp1, const double* fp2, double inv_12h,
                   double* out, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Table in use for this process.
const KernelTable& active();

std::string_view isa_name(Isa isa);

}  // namespace axial::simd

#pragma once

#include <complex>
#include <cstddef>

// Element-wise arithmetic kernels used by the hot loops (filter application,
// demodulation, envelope arithmetic, magnitude maps). Scalar reference
// implementations plus SIMD variants selected once at startup; all variants
// are equivalence-tested against the scalar path.

namespace mdkit::kernels {

using cplx = std::complex<double>;

// dst[i] = a[i] * b[i]
void cmul(cplx* dst, const cplx* a, const cplx* b, std::size_t n);
// dst[i] = a[i] * w[i], real weights
void cmul_real(cplx* dst, const cplx* a, const double* w, std::size_t n);
// dst[i] += alpha * x[i]
void caxpy(cplx* dst, cplx alpha, const cplx* x, std::size_t n);
// dst[i] = a[i] - s * b[i]
void csub_scaled(cplx* dst, const cplx* a, const cplx* b, double s, std::size_t n);
// dst[i] = c*Re(a[i]) + s*Im(a[i])
void project_real(double* dst, const cplx* a, double c, double s, std::size_t n);
// dst[i] = |a[i]|^2
void mag_sq(double* dst, const cplx* a, std::size_t n);
// sum of |a[i]|^2
double sum_mag_sq(const cplx* a, std::size_t n);

// Name of the backend in use ("scalar", "avx2", "neon").
const char* active_backend();

// Individual backends, exposed for equivalence tests and benchmarks.
namespace scalar {
void cmul(cplx* dst, const cplx* a, const cplx* b, std::size_t n);
void cmul_real(cplx* dst, const cplx* a, const double* w, std::size_t n);
void caxpy(cplx* dst, cplx alpha, const cplx* x, std::size_t n);
void csub_scaled(cplx* dst, const cplx* a, const cplx* b, double s, std::size_t n);
void project_real(double* dst, const cplx* a, double c, double s, std::size_t n);
void mag_sq(double* dst, const cplx* a, std::size_t n);
double sum_mag_sq(const cplx* a, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define MDKIT_HAVE_AVX2_BACKEND 1
namespace avx2 {
void cmul(cplx* dst, const cplx* a, const cplx* b, std::size_t n);
void cmul_real(cplx* dst, const cplx* a, const double* w, std::size_t n);
void caxpy(cplx* dst, cplx alpha, const cplx* x, std::size_t n);
void csub_scaled(cplx* dst, const cplx* a, const cplx* b, double s, std::size_t n);
void project_real(double* dst, const cplx* a, double c, double s, std::size_t n);
void mag_sq(double* dst, const cplx* a, std::size_t n);
double sum_mag_sq(const cplx* a, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define MDKIT_HAVE_NEON_BACKEND 1
namespace neon {
void cmul(cplx* dst, const cplx* a, const cplx* b, std::size_t n);
void cmul_real(cplx* dst, const cplx* a, const double* w, std::size_t n);
void caxpy(cplx* dst, cplx alpha, const cplx* x, std::size_t n);
void csub_scaled(cplx* dst, const cplx* a, const cplx* b, double s, std::size_t n);
void project_real(double* dst, const cplx* a, double c, double s, std::size_t n);
void mag_sq(double* dst, const cplx* a, std::size_t n);
double sum_mag_sq(const cplx* a, std::size_t n);
}  // namespace neon
#endif

}  // namespace mdkit::kernels

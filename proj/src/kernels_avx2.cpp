#include "mdkit/kernels.hpp"

#if defined(MDKIT_HAVE_AVX2_BACKEND)

#include <immintrin.h>

// Complex doubles are processed as [re0, im0, re1, im1] lanes, two complex
// values per 256-bit register. Tail elements fall through to scalar code.

namespace mdkit::kernels::avx2 {

namespace {

// [br0, bi0, br1, bi1] -> ([br0, br0, br1, br1], [bi0, bi0, bi1, bi1])
inline void split_re_im(__m256d b, __m256d& re, __m256d& im) {
    re = _mm256_movedup_pd(b);
    im = _mm256_unpackhi_pd(b, b);
}

inline __m256d cmul2(__m256d a, __m256d bre, __m256d bim) {
    const __m256d aswap = _mm256_permute_pd(a, 0x5);
    return _mm256_addsub_pd(_mm256_mul_pd(a, bre), _mm256_mul_pd(aswap, bim));
}

}  // namespace

void cmul(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        __m256d bre, bim;
        split_re_im(vb, bre, bim);
        _mm256_storeu_pd(pd + 2 * i, cmul2(va, bre, bim));
    }
    if (i < n) scalar::cmul(dst + i, a + i, b + i, n - i);
}

void cmul_real(cplx* dst, const cplx* a, const double* w, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vw = _mm256_setr_pd(w[i], w[i], w[i + 1], w[i + 1]);
        _mm256_storeu_pd(pd + 2 * i, _mm256_mul_pd(va, vw));
    }
    if (i < n) scalar::cmul_real(dst + i, a + i, w + i, n - i);
}

void caxpy(cplx* dst, cplx alpha, const cplx* x, std::size_t n) {
    const __m256d bre = _mm256_set1_pd(alpha.real());
    const __m256d bim = _mm256_set1_pd(alpha.imag());
    const double* px = reinterpret_cast<const double*>(x);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * i);
        const __m256d vd = _mm256_loadu_pd(pd + 2 * i);
        _mm256_storeu_pd(pd + 2 * i, _mm256_add_pd(vd, cmul2(vx, bre, bim)));
    }
    if (i < n) scalar::caxpy(dst + i, alpha, x + i, n - i);
}

void csub_scaled(cplx* dst, const cplx* a, const cplx* b, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(pd + 2 * i, _mm256_sub_pd(va, _mm256_mul_pd(vs, vb)));
    }
    if (i < n) scalar::csub_scaled(dst + i, a + i, b + i, s, n - i);
}

void project_real(double* dst, const cplx* a, double c, double s, std::size_t n) {
    const __m256d vcs = _mm256_setr_pd(c, s, c, s);
    const double* pa = reinterpret_cast<const double*>(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * i), vcs);
        const __m256d p1 = _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * i + 4), vcs);
        // hadd yields [p0a, p1a, p0b, p1b]; restore element order.
        const __m256d h = _mm256_hadd_pd(p0, p1);
        _mm256_storeu_pd(dst + i, _mm256_permute4x64_pd(h, 0b11011000));
    }
    if (i < n) scalar::project_real(dst + i, a + i, c, s, n - i);
}

void mag_sq(double* dst, const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = _mm256_loadu_pd(pa + 2 * i);
        const __m256d v1 = _mm256_loadu_pd(pa + 2 * i + 4);
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        _mm256_storeu_pd(dst + i, _mm256_permute4x64_pd(h, 0b11011000));
    }
    if (i < n) scalar::mag_sq(dst + i, a + i, n - i);
}

double sum_mag_sq(const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    if (i < n) total += scalar::sum_mag_sq(a + i, n - i);
    return total;
}

}  // namespace mdkit::kernels::avx2

#endif  // MDKIT_HAVE_AVX2_BACKEND

#include "mdkit/kernels.hpp"

#if defined(MDKIT_HAVE_NEON_BACKEND)

#include <arm_neon.h>

// vld2q_f64 deinterleaves two complex doubles into re/im lanes.

namespace mdkit::kernels::neon {

void cmul(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2x2_t va = vld2q_f64(pa + 2 * i);
        const float64x2x2_t vb = vld2q_f64(pb + 2 * i);
        float64x2x2_t out;
        out.val[0] = vfmsq_f64(vmulq_f64(va.val[0], vb.val[0]), va.val[1], vb.val[1]);
        out.val[1] = vfmaq_f64(vmulq_f64(va.val[0], vb.val[1]), va.val[1], vb.val[0]);
        vst2q_f64(pd + 2 * i, out);
    }
    if (i < n) scalar::cmul(dst + i, a + i, b + i, n - i);
}

void cmul_real(cplx* dst, const cplx* a, const double* w, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2x2_t va = vld2q_f64(pa + 2 * i);
        const float64x2_t vw = vld1q_f64(w + i);
        float64x2x2_t out;
        out.val[0] = vmulq_f64(va.val[0], vw);
        out.val[1] = vmulq_f64(va.val[1], vw);
        vst2q_f64(pd + 2 * i, out);
    }
    if (i < n) scalar::cmul_real(dst + i, a + i, w + i, n - i);
}

void caxpy(cplx* dst, cplx alpha, const cplx* x, std::size_t n) {
    const float64x2_t br = vdupq_n_f64(alpha.real());
    const float64x2_t bi = vdupq_n_f64(alpha.imag());
    const double* px = reinterpret_cast<const double*>(x);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2x2_t vx = vld2q_f64(px + 2 * i);
        float64x2x2_t vd = vld2q_f64(pd + 2 * i);
        const float64x2_t pr = vfmsq_f64(vmulq_f64(vx.val[0], br), vx.val[1], bi);
        const float64x2_t pi = vfmaq_f64(vmulq_f64(vx.val[0], bi), vx.val[1], br);
        vd.val[0] = vaddq_f64(vd.val[0], pr);
        vd.val[1] = vaddq_f64(vd.val[1], pi);
        vst2q_f64(pd + 2 * i, vd);
    }
    if (i < n) scalar::caxpy(dst + i, alpha, x + i, n - i);
}

void csub_scaled(cplx* dst, const cplx* a, const cplx* b, double s, std::size_t n) {
    const float64x2_t vs = vdupq_n_f64(s);
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2x2_t va = vld2q_f64(pa + 2 * i);
        const float64x2x2_t vb = vld2q_f64(pb + 2 * i);
        float64x2x2_t out;
        out.val[0] = vsubq_f64(va.val[0], vmulq_f64(vs, vb.val[0]));
        out.val[1] = vsubq_f64(va.val[1], vmulq_f64(vs, vb.val[1]));
        vst2q_f64(pd + 2 * i, out);
    }
    if (i < n) scalar::csub_scaled(dst + i, a + i, b + i, s, n - i);
}

void project_real(double* dst, const cplx* a, double c, double s, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    const double* pa = reinterpret_cast<const double*>(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2x2_t va = vld2q_f64(pa + 2 * i);
        vst1q_f64(dst + i, vfmaq_f64(vmulq_f64(va.val[0], vc), va.val[1], vs));
    }
    if (i < n) scalar::project_real(dst + i, a + i, c, s, n - i);
}

void mag_sq(double* dst, const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2x2_t va = vld2q_f64(pa + 2 * i);
        vst1q_f64(dst + i,
                  vfmaq_f64(vmulq_f64(va.val[0], va.val[0]), va.val[1], va.val[1]));
    }
    if (i < n) scalar::mag_sq(dst + i, a + i, n - i);
}

double sum_mag_sq(const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2x2_t va = vld2q_f64(pa + 2 * i);
        acc = vfmaq_f64(acc, va.val[0], va.val[0]);
        acc = vfmaq_f64(acc, va.val[1], va.val[1]);
    }
    double total = vaddvq_f64(acc);
    if (i < n) total += scalar::sum_mag_sq(a + i, n - i);
    return total;
}

}  // namespace mdkit::kernels::neon

#endif  // MDKIT_HAVE_NEON_BACKEND

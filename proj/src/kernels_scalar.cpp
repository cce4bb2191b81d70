#include "mdkit/kernels.hpp"

namespace mdkit::kernels::scalar {

void cmul(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        dst[i] = {ar * br - ai * bi, ai * br + ar * bi};
    }
}

void cmul_real(cplx* dst, const cplx* a, const double* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = {a[i].real() * w[i], a[i].imag() * w[i]};
    }
}

void caxpy(cplx* dst, cplx alpha, const cplx* x, std::size_t n) {
    const double br = alpha.real(), bi = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = x[i].real(), ai = x[i].imag();
        dst[i] += cplx{ar * br - ai * bi, ai * br + ar * bi};
    }
}

void csub_scaled(cplx* dst, const cplx* a, const cplx* b, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = {a[i].real() - s * b[i].real(), a[i].imag() - s * b[i].imag()};
    }
}

void project_real(double* dst, const cplx* a, double c, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = c * a[i].real() + s * a[i].imag();
    }
}

void mag_sq(double* dst, const cplx* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
}

double sum_mag_sq(const cplx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return acc;
}

}  // namespace mdkit::kernels::scalar

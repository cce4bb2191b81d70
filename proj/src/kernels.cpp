#include "mdkit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mdkit::kernels {

namespace {

struct Backend {
    const char* name;
    void (*cmul)(cplx*, const cplx*, const cplx*, std::size_t);
    void (*cmul_real)(cplx*, const cplx*, const double*, std::size_t);
    void (*caxpy)(cplx*, cplx, const cplx*, std::size_t);
    void (*csub_scaled)(cplx*, const cplx*, const cplx*, double, std::size_t);
    void (*project_real)(double*, const cplx*, double, double, std::size_t);
    void (*mag_sq)(double*, const cplx*, std::size_t);
    double (*sum_mag_sq)(const cplx*, std::size_t);
};

constexpr Backend kScalar{"scalar",
                          scalar::cmul,
                          scalar::cmul_real,
                          scalar::caxpy,
                          scalar::csub_scaled,
                          scalar::project_real,
                          scalar::mag_sq,
                          scalar::sum_mag_sq};

#if defined(MDKIT_HAVE_AVX2_BACKEND)
constexpr Backend kAvx2{"avx2",
                        avx2::cmul,
                        avx2::cmul_real,
                        avx2::caxpy,
                        avx2::csub_scaled,
                        avx2::project_real,
                        avx2::mag_sq,
                        avx2::sum_mag_sq};
#endif

#if defined(MDKIT_HAVE_NEON_BACKEND)
constexpr Backend kNeon{"neon",
                        neon::cmul,
                        neon::cmul_real,
                        neon::caxpy,
                        neon::csub_scaled,
                        neon::project_real,
                        neon::mag_sq,
                        neon::sum_mag_sq};
#endif

const Backend& select_backend() {
    // MDKIT_KERNELS=scalar forces the reference path.
    if (const char* env = std::getenv("MDKIT_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return kScalar;
    }
#if defined(MDKIT_HAVE_NEON_BACKEND)
    return kNeon;
#elif defined(MDKIT_HAVE_AVX2_BACKEND)
    if (__builtin_cpu_supports("avx2")) return kAvx2;
    return kScalar;
#else
    return kScalar;
#endif
}

const Backend& active() {
    static const Backend& b = select_backend();
    return b;
}

}  // namespace

void cmul(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
    active().cmul(dst, a, b, n);
}
void cmul_real(cplx* dst, const cplx* a, const double* w, std::size_t n) {
    active().cmul_real(dst, a, w, n);
}
void caxpy(cplx* dst, cplx alpha, const cplx* x, std::size_t n) {
    active().caxpy(dst, alpha, x, n);
}
void csub_scaled(cplx* dst, const cplx* a, const cplx* b, double s, std::size_t n) {
    active().csub_scaled(dst, a, b, s, n);
}
void project_real(double* dst, const cplx* a, double c, double s, std::size_t n) {
    active().project_real(dst, a, c, s, n);
}
void mag_sq(double* dst, const cplx* a, std::size_t n) {
    active().mag_sq(dst, a, n);
}
double sum_mag_sq(const cplx* a, std::size_t n) {
    return active().sum_mag_sq(a, n);
}
const char* active_backend() {
    return active().name;
}

}  // namespace mdkit::kernels

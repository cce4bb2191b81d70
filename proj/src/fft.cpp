#include "mdkit/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mdkit::fft {

namespace {

// FFTW plan creation is not thread safe; fftw_execute_dft on distinct
// buffers is. Plans are created with FFTW_UNALIGNED so they can run on
// arbitrary std::vector storage.
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> dummy(n);
        fftw_plan p = fftw_plan_dft_1d(
            static_cast<int>(n), reinterpret_cast<fftw_complex*>(dummy.data()),
            reinterpret_cast<fftw_complex*>(dummy.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(std::span<const cplx> in, std::span<cplx> out, int sign) {
    const std::size_t n = in.size();
    if (out.size() != n) throw std::invalid_argument("fft: size mismatch");
    if (n == 0) return;
    // Plans are created in-place, so transforms always run in-place on the
    // output buffer.
    if (out.data() != in.data()) std::copy(in.begin(), in.end(), out.begin());
    fftw_plan p = cache().get(n, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(out.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

void scale(std::span<cplx> buf, double s) {
    for (auto& v : buf) v *= s;
}

}  // namespace

void forward(std::span<const cplx> in, std::span<cplx> out) {
    execute(in, out, FFTW_FORWARD);
}

void inverse(std::span<const cplx> in, std::span<cplx> out) {
    execute(in, out, FFTW_BACKWARD);
    scale(out, 1.0 / static_cast<double>(in.size()));
}

std::vector<cplx> forward(std::span<const cplx> in) {
    std::vector<cplx> out(in.size());
    forward(in, out);
    return out;
}

std::vector<cplx> inverse(std::span<const cplx> in) {
    std::vector<cplx> out(in.size());
    inverse(in, out);
    return out;
}

void forward_inplace(std::span<cplx> buf) {
    execute(buf, buf, FFTW_FORWARD);
}

void inverse_inplace(std::span<cplx> buf) {
    execute(buf, buf, FFTW_BACKWARD);
    scale(buf, 1.0 / static_cast<double>(buf.size()));
}

}  // namespace mdkit::fft

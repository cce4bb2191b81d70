#pragma once

#include <span>
#include <vector>

#include "mdkit/types.hpp"

// Thin wrapper over FFTW's 1D complex transforms. Plans are cached per
// (size, direction) and guarded by a mutex; execution on caller-owned
// buffers is safe from multiple threads.
//
// Conventions: forward is unnormalized (exp(-j 2 pi k n / N)); inverse
// carries the 1/N factor, so inverse(forward(x)) == x.

namespace mdkit::fft {

void forward(std::span<const cplx> in, std::span<cplx> out);
void inverse(std::span<const cplx> in, std::span<cplx> out);

std::vector<cplx> forward(std::span<const cplx> in);
std::vector<cplx> inverse(std::span<const cplx> in);

// In-place variants.
void forward_inplace(std::span<cplx> buf);
void inverse_inplace(std::span<cplx> buf);

}  // namespace mdkit::fft

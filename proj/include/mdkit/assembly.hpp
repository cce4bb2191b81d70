#pragma once

#include <cstdint>
#include <vector>

#include "mdkit/types.hpp"

// Analysis-signal construction: slow-time extraction (the conventional
// aliasing-limited path), fast-time chirp appending with and without
// idle-gap linear fitting, and the demodulation step of the original
// fast-time method, kept for comparison runs.

namespace mdkit {

// Appended fast-time stream. With linear fitting enabled the idle gap
// between consecutive chirps is bridged by Q straight-line samples and the
// stream length is L*N + (L-1)*Q; without it the rows are concatenated
// as-is (length L*N).
struct FastTimeStream {
    std::vector<cplx> samples;
    double sample_rate_hz = 0.0;
    std::vector<std::uint8_t> interp_mask;     // true on inserted idle samples
    std::vector<std::size_t> chirp_boundaries; // stream index of each chirp start
    double chirp_repetition_interval_s = 0.0;
    bool linear_fitted = false;

    // Absolute time of a stream sample. A fitted stream maps sample k of
    // chirp l to l*Tcri + k*Ts, which keeps downstream periodicity estimates
    // honest; a raw stream deliberately ignores the idle time (that is the
    // artifact this path reproduces) and maps index i to i*Ts.
    double sample_time(std::size_t index) const;
};

// Column of the range DFT at range_bin across all chirps; the slow-time
// signal, sampled at f_crf.
std::vector<cplx> stmdse_extract(const ChirpMatrix& chirps, std::size_t range_bin);

// Range bin with the largest mean range-profile magnitude.
std::size_t dominant_range_bin(const ChirpMatrix& chirps);

// Removes the body reference phase for the given range/velocity, centering
// the residual signature at baseband.
ChirpMatrix ftmdse_demodulate(const ChirpMatrix& chirps, double range_m,
                              double velocity_mps);

FastTimeStream append_raw(const ChirpMatrix& chirps);
FastTimeStream append_with_linear_fit(const ChirpMatrix& chirps);

}  // namespace mdkit

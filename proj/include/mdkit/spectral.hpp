#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mdkit/types.hpp"

// Fast-time / slow-time DFTs, range-Doppler map construction, peak pick,
// exact 2D inverse, and STFT spectrograms.
//
// DFT conventions: unnormalized forward, 1/(N L) inverse. The Doppler axis
// is reordered so zero velocity sits at the middle row.

namespace mdkit {

// Complex range-Doppler matrix indexed (doppler_bin, range_bin) with axis
// metadata. range_axis spans [0, fs); doppler_axis is centered on zero.
struct RDMap {
    CMatrix values;                   // num_chirps x samples_per_chirp
    std::vector<double> range_axis;   // Hz per range bin
    std::vector<double> doppler_axis; // Hz per Doppler bin
    RadarParams params;
};

struct Spectrogram {
    std::vector<std::vector<double>> magnitude_db;  // frames x bins
    std::vector<double> frame_times;                // s, frame centers
    std::vector<double> freq_axis;                  // Hz
    std::size_t window_length = 0;
    std::size_t hop = 0;
};

// Per-row N-point DFT of the chirp matrix (rectangular window).
CMatrix range_dft(const ChirpMatrix& chirps);

// Range DFT followed by a Doppler DFT across chirps, Doppler-centered.
RDMap rd_map(const ChirpMatrix& chirps);

struct RDPeak {
    double range_hz = 0.0;
    double doppler_hz = 0.0;
    double magnitude = 0.0;
    std::size_t range_bin = 0;
    std::size_t doppler_bin = 0;
};

// Global magnitude maximum; ties break toward the lowest range bin, then the
// lowest Doppler bin.
RDPeak rd_peak(const RDMap& map);

// Exact inverse of rd_map.
ChirpMatrix inverse_rd(const RDMap& map);

// STFT magnitude spectrogram (Hann window, dB, floored at -120 dB before the
// log). pad_factor > 1 zero-pads each frame for finer ridge localization.
// Throws std::invalid_argument when the signal is shorter than the window.
Spectrogram spectrogram(std::span<const cplx> signal, double sample_rate_hz,
                        std::size_t window_length, double overlap_fraction,
                        std::size_t pad_factor = 1);

}  // namespace mdkit

#include "mdkit/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "mdkit/fft.hpp"
#include "mdkit/kernels.hpp"

namespace mdkit {

namespace {

constexpr double kDbFloor = 1e-6;  // -120 dB

// Centered-axis frequency of bin i after the fftshift-style reordering.
double centered_freq(std::size_t i, std::size_t n, double span_hz) {
    const long long half = static_cast<long long>(n) / 2;
    return (static_cast<double>(static_cast<long long>(i) - half)) * span_hz /
           static_cast<double>(n);
}

}  // namespace

CMatrix range_dft(const ChirpMatrix& chirps) {
    const std::size_t rows = chirps.samples.rows;
    const std::size_t cols = chirps.samples.cols;
    CMatrix out(rows, cols);
    for (std::size_t l = 0; l < rows; ++l) {
        fft::forward(chirps.samples.row(l), out.row(l));
    }
    return out;
}

RDMap rd_map(const ChirpMatrix& chirps) {
    const std::size_t n_chirps = chirps.samples.rows;
    const std::size_t n_range = chirps.samples.cols;
    if (n_chirps < 2) throw std::invalid_argument("rd_map needs at least 2 chirps");

    CMatrix ranged = range_dft(chirps);

    RDMap map;
    map.params = chirps.params;
    map.values = CMatrix(n_chirps, n_range);

    // Doppler DFT down each range column, then center zero Doppler.
    const std::size_t half = n_chirps / 2;
    std::vector<cplx> col(n_chirps), spec(n_chirps);
    for (std::size_t r = 0; r < n_range; ++r) {
        for (std::size_t l = 0; l < n_chirps; ++l) col[l] = ranged.at(l, r);
        fft::forward(col, spec);
        for (std::size_t d = 0; d < n_chirps; ++d) {
            map.values.at(d, r) = spec[(d + half) % n_chirps];
        }
    }

    const double fs = chirps.params.sample_rate_hz;
    const double f_crf = chirps.params.chirp_repetition_frequency_hz();
    map.range_axis.resize(n_range);
    for (std::size_t r = 0; r < n_range; ++r) {
        map.range_axis[r] = static_cast<double>(r) * fs / static_cast<double>(n_range);
    }
    map.doppler_axis.resize(n_chirps);
    for (std::size_t d = 0; d < n_chirps; ++d) {
        map.doppler_axis[d] = centered_freq(d, n_chirps, f_crf);
    }
    return map;
}

RDPeak rd_peak(const RDMap& map) {
    if (map.values.rows == 0 || map.values.cols == 0) {
        throw std::invalid_argument("rd_peak on empty map");
    }
    RDPeak peak;
    double best = -1.0;
    for (std::size_t r = 0; r < map.values.cols; ++r) {
        for (std::size_t d = 0; d < map.values.rows; ++d) {
            const double m = std::abs(map.values.at(d, r));
            if (m > best) {
                best = m;
                peak.range_bin = r;
                peak.doppler_bin = d;
            }
        }
    }
    peak.magnitude = best;
    peak.range_hz = map.range_axis[peak.range_bin];
    peak.doppler_hz = map.doppler_axis[peak.doppler_bin];
    return peak;
}

ChirpMatrix inverse_rd(const RDMap& map) {
    const std::size_t n_chirps = map.values.rows;
    const std::size_t n_range = map.values.cols;
    ChirpMatrix out;
    out.params = map.params;
    out.samples = CMatrix(n_chirps, n_range);

    // Undo the Doppler shift, inverse Doppler DFT per column.
    const std::size_t half = n_chirps / 2;
    CMatrix ranged(n_chirps, n_range);
    std::vector<cplx> spec(n_chirps), col(n_chirps);
    for (std::size_t r = 0; r < n_range; ++r) {
        for (std::size_t d = 0; d < n_chirps; ++d) {
            spec[(d + half) % n_chirps] = map.values.at(d, r);
        }
        fft::inverse(spec, col);
        for (std::size_t l = 0; l < n_chirps; ++l) ranged.at(l, r) = col[l];
    }
    for (std::size_t l = 0; l < n_chirps; ++l) {
        fft::inverse(ranged.row(l), out.samples.row(l));
    }
    return out;
}

Spectrogram spectrogram(std::span<const cplx> signal, double sample_rate_hz,
                        std::size_t window_length, double overlap_fraction,
                        std::size_t pad_factor) {
    if (window_length == 0 || window_length > signal.size()) {
        throw std::invalid_argument("spectrogram: window longer than signal");
    }
    if (overlap_fraction < 0.0 || overlap_fraction >= 1.0) {
        throw std::invalid_argument("spectrogram: overlap_fraction must be in [0,1)");
    }
    if (pad_factor == 0) pad_factor = 1;

    Spectrogram out;
    out.window_length = window_length;
    out.hop = std::max<std::size_t>(
        1, static_cast<std::size_t>(
               std::llround(static_cast<double>(window_length) * (1.0 - overlap_fraction))));
    const std::size_t frames = (signal.size() - window_length) / out.hop + 1;
    const std::size_t nfft = window_length * pad_factor;

    std::vector<double> window(window_length);
    for (std::size_t n = 0; n < window_length; ++n) {
        window[n] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(n) /
                                          static_cast<double>(window_length)));
    }

    out.freq_axis.resize(nfft);
    for (std::size_t k = 0; k < nfft; ++k) {
        out.freq_axis[k] = static_cast<double>(k) * sample_rate_hz /
                           static_cast<double>(nfft);
    }
    out.frame_times.resize(frames);
    out.magnitude_db.assign(frames, std::vector<double>(nfft));

    std::vector<cplx> frame(nfft);
    std::vector<double> power(nfft);
    for (std::size_t f = 0; f < frames; ++f) {
        const std::size_t start = f * out.hop;
        out.frame_times[f] = (static_cast<double>(start) +
                              static_cast<double>(window_length) / 2.0) /
                             sample_rate_hz;
        kernels::cmul_real(frame.data(), signal.data() + start, window.data(),
                           window_length);
        std::fill(frame.begin() + static_cast<long>(window_length), frame.end(),
                  cplx{0.0, 0.0});
        fft::forward_inplace(frame);
        kernels::mag_sq(power.data(), frame.data(), nfft);
        auto& row = out.magnitude_db[f];
        for (std::size_t k = 0; k < nfft; ++k) {
            const double mag = std::sqrt(power[k]);
            row[k] = 20.0 * std::log10(mag > kDbFloor ? mag : kDbFloor);
        }
    }
    return out;
}

}  // namespace mdkit

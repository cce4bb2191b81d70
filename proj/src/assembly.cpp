#include "mdkit/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mdkit/kernels.hpp"
#include "mdkit/spectral.hpp"

namespace mdkit {

double FastTimeStream::sample_time(std::size_t index) const {
    const double ts = 1.0 / sample_rate_hz;
    if (!linear_fitted) return static_cast<double>(index) * ts;
    auto it = std::upper_bound(chirp_boundaries.begin(), chirp_boundaries.end(), index);
    const std::size_t l = static_cast<std::size_t>(it - chirp_boundaries.begin()) - 1;
    const std::size_t k = index - chirp_boundaries[l];
    return static_cast<double>(l) * chirp_repetition_interval_s +
           static_cast<double>(k) * ts;
}

std::vector<cplx> stmdse_extract(const ChirpMatrix& chirps, std::size_t range_bin) {
    if (range_bin >= chirps.samples.cols) {
        throw std::invalid_argument("stmdse_extract: range_bin out of range");
    }
    CMatrix profile = range_dft(chirps);
    std::vector<cplx> out(profile.rows);
    for (std::size_t l = 0; l < profile.rows; ++l) out[l] = profile.at(l, range_bin);
    return out;
}

std::size_t dominant_range_bin(const ChirpMatrix& chirps) {
    CMatrix profile = range_dft(chirps);
    std::vector<double> mean_mag(profile.cols, 0.0);
    std::vector<double> row_power(profile.cols);
    for (std::size_t l = 0; l < profile.rows; ++l) {
        kernels::mag_sq(row_power.data(), profile.row(l).data(), profile.cols);
        for (std::size_t r = 0; r < profile.cols; ++r) {
            mean_mag[r] += std::sqrt(row_power[r]);
        }
    }
    return static_cast<std::size_t>(
        std::max_element(mean_mag.begin(), mean_mag.end()) - mean_mag.begin());
}

ChirpMatrix ftmdse_demodulate(const ChirpMatrix& chirps, double range_m,
                              double velocity_mps) {
    const RadarParams& p = chirps.params;
    ChirpMatrix out;
    out.params = p;
    out.samples = CMatrix(chirps.samples.rows, chirps.samples.cols);

    const double ts = 1.0 / p.sample_rate_hz;
    const double lambda = p.wavelength_m();
    const double mu = p.chirp_rate_hz_per_s;
    const double c = p.propagation_speed;

    std::vector<cplx> ref(chirps.samples.cols);
    for (std::size_t l = 0; l < chirps.samples.rows; ++l) {
        const double chirp_start =
            static_cast<double>(l) * p.chirp_repetition_interval_s;
        for (std::size_t n = 0; n < chirps.samples.cols; ++n) {
            const double t = static_cast<double>(n) * ts;
            const double phase = (4.0 * kPi / lambda + 4.0 * kPi * mu * t / c) *
                                 (range_m + velocity_mps * (t + chirp_start));
            ref[n] = std::polar(1.0, -phase);
        }
        kernels::cmul(out.samples.row(l).data(), chirps.samples.row(l).data(),
                      ref.data(), chirps.samples.cols);
    }
    return out;
}

FastTimeStream append_raw(const ChirpMatrix& chirps) {
    const std::size_t n_chirps = chirps.samples.rows;
    const std::size_t n_samples = chirps.samples.cols;
    FastTimeStream s;
    s.sample_rate_hz = chirps.params.sample_rate_hz;
    s.chirp_repetition_interval_s = chirps.params.chirp_repetition_interval_s;
    s.linear_fitted = false;
    s.samples.reserve(n_chirps * n_samples);
    s.chirp_boundaries.reserve(n_chirps);
    for (std::size_t l = 0; l < n_chirps; ++l) {
        s.chirp_boundaries.push_back(s.samples.size());
        auto row = chirps.samples.row(l);
        s.samples.insert(s.samples.end(), row.begin(), row.end());
    }
    s.interp_mask.assign(s.samples.size(), 0);
    return s;
}

FastTimeStream append_with_linear_fit(const ChirpMatrix& chirps) {
    const std::size_t q = chirps.params.idle_samples();
    if (q == 0) return append_raw(chirps);

    const std::size_t n_chirps = chirps.samples.rows;
    const std::size_t n_samples = chirps.samples.cols;
    FastTimeStream s;
    s.sample_rate_hz = chirps.params.sample_rate_hz;
    s.chirp_repetition_interval_s = chirps.params.chirp_repetition_interval_s;
    s.linear_fitted = true;
    s.samples.reserve(n_chirps * n_samples + (n_chirps - 1) * q);
    s.interp_mask.reserve(s.samples.capacity());
    s.chirp_boundaries.reserve(n_chirps);

    for (std::size_t l = 0; l < n_chirps; ++l) {
        s.chirp_boundaries.push_back(s.samples.size());
        auto row = chirps.samples.row(l);
        s.samples.insert(s.samples.end(), row.begin(), row.end());
        s.interp_mask.insert(s.interp_mask.end(), n_samples, 0);
        if (l + 1 < n_chirps) {
            // Straight line from the last sample toward the next chirp's
            // first sample, evaluated at n*Ts/T_idle for n in [0, Q). The
            // end point is approached, not attained.
            const cplx tail = chirps.samples.at(l, n_samples - 1);
            const cplx head = chirps.samples.at(l + 1, 0);
            const cplx slope = (head - tail) / static_cast<double>(q);
            for (std::size_t n = 0; n < q; ++n) {
                s.samples.push_back(tail + slope * static_cast<double>(n));
                s.interp_mask.push_back(1);
            }
        }
    }
    return s;
}

}  // namespace mdkit

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mdkit {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultPropagationSpeed = 2.998e8;  // m/s

// FMCW chirp timing and frequency description.
struct RadarParams {
    double start_frequency_hz = 0.0;      // f0
    double chirp_rate_hz_per_s = 0.0;     // mu
    double chirp_duration_s = 0.0;        // Tc
    double chirp_repetition_interval_s = 0.0;  // Tcri >= Tc
    double sample_rate_hz = 0.0;          // fs
    std::size_t num_chirps = 0;           // L
    double propagation_speed = kDefaultPropagationSpeed;  // c

    double bandwidth_hz() const { return chirp_rate_hz_per_s * chirp_duration_s; }
    double wavelength_m() const { return propagation_speed / start_frequency_hz; }
    double chirp_repetition_frequency_hz() const {
        return 1.0 / chirp_repetition_interval_s;
    }
    double range_bin_size_m() const {
        return propagation_speed / (2.0 * bandwidth_hz());
    }
    // Sample counts come from rounding Tc*fs and (Tcri-Tc)*fs to the nearest
    // integer (Table-style timings need not divide evenly).
    std::size_t samples_per_chirp() const {
        return static_cast<std::size_t>(
            std::llround(chirp_duration_s * sample_rate_hz));
    }
    std::size_t idle_samples() const {
        double idle = (chirp_repetition_interval_s - chirp_duration_s) * sample_rate_hz;
        long long q = std::llround(idle);
        return q > 0 ? static_cast<std::size_t>(q) : 0u;
    }
    double range_freq_hz(double range_m) const {
        return 2.0 * chirp_rate_hz_per_s * range_m / propagation_speed;
    }
    double doppler_freq_hz(double velocity_mps) const {
        return 2.0 * velocity_mps * start_frequency_hz / propagation_speed;
    }

    // Throws ConfigError naming the offending field.
    void validate() const;
};

// Rotor-bearing target: body position/velocity plus blade geometry.
struct RotorTarget {
    double range_m = 0.0;              // R0 > 0
    double radial_velocity_mps = 0.0;  // v0
    double body_amplitude = 1.0;       // alpha_body, linear
    double blade_amplitude = 0.0;      // alpha_b, linear (per unit length)
    std::size_t num_blades = 0;        // K_B
    double blade_length_m = 0.0;       // L_B
    double rotation_rate_rad_s = 0.0;  // Omega
    std::vector<double> initial_offsets_rad;  // psi_b, one per blade
    double elevation_rad = 0.0;        // beta

    // Evenly spaced offsets when none are given.
    void default_offsets();
    void validate() const;
};

// Row-major complex matrix.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cplx& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<cplx> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const cplx> row(std::size_t r) const {
        return {data.data() + r * cols, cols};
    }
};

// L x N deramped sample matrix: row l holds chirp l sampled at t = n/fs.
struct ChirpMatrix {
    CMatrix samples;
    RadarParams params;
};

}  // namespace mdkit

#include "mdkit/synth.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "mdkit/kernels.hpp"

namespace mdkit {

namespace {

// Unnormalized sinc with the removable singularity handled analytically.
double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

void check_chirp_index(const RadarParams& params, std::size_t chirp_index) {
    if (chirp_index >= params.num_chirps) {
        throw std::invalid_argument("chirp_index out of range");
    }
}

}  // namespace

std::vector<cplx> synth_point_target(const RadarParams& params, double range_m,
                                     double velocity_mps, double amplitude,
                                     std::size_t chirp_index) {
    check_chirp_index(params, chirp_index);
    if (params.range_freq_hz(range_m) >= params.sample_rate_hz / 2.0) {
        throw std::invalid_argument(
            "range beat frequency at or beyond fs/2; target not representable");
    }
    const std::size_t n_samples = params.samples_per_chirp();
    std::vector<cplx> out(n_samples);
    if (amplitude == 0.0) return out;

    const double ts = 1.0 / params.sample_rate_hz;
    const double lambda = params.wavelength_m();
    const double mu = params.chirp_rate_hz_per_s;
    const double c = params.propagation_speed;
    const double chirp_start = static_cast<double>(chirp_index) *
                               params.chirp_repetition_interval_s;
    for (std::size_t n = 0; n < n_samples; ++n) {
        const double t = static_cast<double>(n) * ts;
        const double t_abs = t + chirp_start;
        const double phase = (4.0 * kPi / lambda + 4.0 * kPi * mu * t / c) *
                             (range_m + velocity_mps * t_abs);
        out[n] = std::polar(amplitude, phase);
    }
    return out;
}

std::vector<cplx> synth_blade_response(const RadarParams& params,
                                       const RotorTarget& target,
                                       std::size_t blade_index,
                                       std::size_t chirp_index) {
    check_chirp_index(params, chirp_index);
    if (blade_index >= target.num_blades) {
        throw std::invalid_argument("blade_index out of range");
    }
    const std::size_t n_samples = params.samples_per_chirp();
    std::vector<cplx> out(n_samples);

    const double ts = 1.0 / params.sample_rate_hz;
    const double lambda = params.wavelength_m();
    const double mu = params.chirp_rate_hz_per_s;
    const double c = params.propagation_speed;
    const double half_blade = target.blade_length_m / 2.0;
    const double cos_beta = std::cos(target.elevation_rad);
    const double psi = target.initial_offsets_rad[blade_index];
    const double amp = target.blade_length_m * target.blade_amplitude;
    const double chirp_start = static_cast<double>(chirp_index) *
                               params.chirp_repetition_interval_s;
    for (std::size_t n = 0; n < n_samples; ++n) {
        const double t = static_cast<double>(n) * ts;
        const double t_abs = t + chirp_start;
        const double omega_b = target.rotation_rate_rad_s * t_abs + psi;
        const double k = 4.0 * kPi / lambda + 4.0 * kPi * mu * t / c;
        const double blade_offset = half_blade * cos_beta * std::cos(omega_b);
        const double phase =
            k * (target.range_m + target.radial_velocity_mps * t_abs + blade_offset);
        out[n] = std::polar(amp * sinc(k * blade_offset), phase);
    }
    return out;
}

ChirpMatrix synth_scene(const RadarParams& params, const RotorTarget& target,
                        double snr_db, double blade_body_ratio_db,
                        std::uint64_t seed) {
    params.validate();
    target.validate();
    const std::size_t n_samples = params.samples_per_chirp();
    const std::size_t n_chirps = params.num_chirps;

    ChirpMatrix scene;
    scene.params = params;
    scene.samples = CMatrix(n_chirps, n_samples);

    // Blade amplitude so that L_B * alpha_b sits ratio_db below the body.
    RotorTarget t = target;
    if (t.num_blades > 0 && t.blade_length_m > 0.0) {
        const double body_ref = t.body_amplitude != 0.0 ? std::abs(t.body_amplitude) : 1.0;
        t.blade_amplitude =
            body_ref * std::pow(10.0, blade_body_ratio_db / 20.0) / t.blade_length_m;
    }

    for (std::size_t l = 0; l < n_chirps; ++l) {
        auto row = scene.samples.row(l);
        if (t.body_amplitude != 0.0) {
            auto body = synth_point_target(params, t.range_m, t.radial_velocity_mps,
                                           t.body_amplitude, l);
            kernels::caxpy(row.data(), cplx{1.0, 0.0}, body.data(), n_samples);
        }
        for (std::size_t b = 0; b < t.num_blades; ++b) {
            auto blade = synth_blade_response(params, t, b, l);
            kernels::caxpy(row.data(), cplx{1.0, 0.0}, blade.data(), n_samples);
        }
    }

    if (std::isfinite(snr_db)) {
        // Noise referenced to body power per sample; when the scene has no
        // body the reference is unit power.
        const double ref_power =
            t.body_amplitude != 0.0 ? t.body_amplitude * t.body_amplitude : 1.0;
        const double noise_power = ref_power * std::pow(10.0, -snr_db / 10.0);
        const double sigma = std::sqrt(noise_power / 2.0);
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, sigma);
        for (auto& v : scene.samples.data) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            v += cplx{re, im};
        }
    }
    return scene;
}

double md_instantaneous_freq(const RadarParams& params, const RotorTarget& target,
                             std::size_t blade_index, double t,
                             std::size_t chirp_index) {
    if (blade_index >= target.num_blades) {
        throw std::invalid_argument("blade_index out of range");
    }
    const double mu = params.chirp_rate_hz_per_s;
    const double c = params.propagation_speed;
    const double lambda = params.wavelength_m();
    const double cos_beta = std::cos(target.elevation_rad);
    const double omega = target.rotation_rate_rad_s;
    const double t_abs = t + static_cast<double>(chirp_index) *
                                 params.chirp_repetition_interval_s;
    const double omega_b = omega * t_abs + target.initial_offsets_rad[blade_index];
    const double f_r0 = params.range_freq_hz(target.range_m);
    const double f_d0 = params.doppler_freq_hz(target.radial_velocity_mps);
    const double lb = target.blade_length_m;
    return f_r0 + f_d0 +
           (lb * mu * cos_beta / c) * (std::cos(omega_b) - t * omega * std::sin(omega_b)) +
           (2.0 * mu / c) * target.radial_velocity_mps * t_abs -
           (lb * omega * cos_beta / lambda) * std::sin(omega_b);
}

double md_max_spread(const RadarParams& params, const RotorTarget& target) {
    return 2.0 * target.blade_length_m * target.rotation_rate_rad_s /
           params.propagation_speed *
           (params.bandwidth_hz() + params.start_frequency_hz);
}

AliasReport alias_report(const RadarParams& params, const RotorTarget& target) {
    AliasReport r;
    r.spread_hz = md_max_spread(params, target);
    const double f_d0 = params.doppler_freq_hz(target.radial_velocity_mps);
    const double f_r0 = params.range_freq_hz(target.range_m);
    const double f_crf = params.chirp_repetition_frequency_hz();

    r.slow_time_occupancy_hz = std::abs(f_d0) + r.spread_hz / 2.0;
    r.slow_time_limit_hz = f_crf / 2.0;
    r.slow_time_aliased = r.slow_time_occupancy_hz > r.slow_time_limit_hz;

    const double range_cell_hz = params.chirp_rate_hz_per_s / params.bandwidth_hz();
    r.range_spread_bins = r.spread_hz / range_cell_hz;
    r.range_spread = r.range_spread_bins > 1.0;

    const double doppler_cell_hz = f_crf / static_cast<double>(params.num_chirps);
    r.doppler_spread_bins = r.spread_hz / doppler_cell_hz;
    r.doppler_spread = r.doppler_spread_bins > 1.0;

    r.fast_time_occupancy_hz = f_r0 + std::abs(f_d0) + r.spread_hz / 2.0;
    r.fast_time_limit_hz = params.sample_rate_hz / 2.0;
    r.fast_time_ok = r.fast_time_occupancy_hz < r.fast_time_limit_hz;
    return r;
}

}  // namespace mdkit

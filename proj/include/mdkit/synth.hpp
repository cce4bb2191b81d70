#pragma once

#include <cstdint>
#include <vector>

#include "mdkit/types.hpp"

// Deramped FMCW chirp synthesis for point targets and rotating-blade
// targets, plus the closed-form micro-Doppler frequency/spread expressions
// used for filter sizing and ridge validation.
//
// Phase convention is +j throughout (the rotor signal-model form); the
// returned samples of a stationary target advance as exp(+j 2 pi f_R t).

namespace mdkit {

// One deramped chirp response of a point scatterer:
//   alpha * exp(+j (4 pi / lambda + 4 pi mu t / c) (R + v t~)),
// t~ = t + l * Tcri, sampled at t = n / fs for n in [0, N).
// Throws std::invalid_argument when 2 mu R / c >= fs / 2 (beat tone outside
// the sampled band) or chirp_index >= L.
std::vector<cplx> synth_point_target(const RadarParams& params, double range_m,
                                     double velocity_mps, double amplitude,
                                     std::size_t chirp_index);

// Integrated response of one rotating blade: a frequency-modulated tone with
// a sinc envelope whose argument tracks the blade aspect angle.
std::vector<cplx> synth_blade_response(const RadarParams& params,
                                       const RotorTarget& target,
                                       std::size_t blade_index,
                                       std::size_t chirp_index);

// Full CPI: body tone + blade responses + circular complex white Gaussian
// noise. Blade amplitude is set so the peak blade response (the L_B*alpha_b
// envelope) sits blade_body_ratio_db below the body amplitude. Noise power
// per sample is body power scaled by -snr_db (unit reference when the scene
// has no body); snr_db = +inf disables noise. Deterministic per seed.
ChirpMatrix synth_scene(const RadarParams& params, const RotorTarget& target,
                        double snr_db, double blade_body_ratio_db,
                        std::uint64_t seed);

// Instantaneous frequency of one blade response at fast time t within chirp
// chirp_index: the time derivative of the synthesized blade phase, whose
// micro-Doppler terms carry the half-blade effective scatter center.
double md_instantaneous_freq(const RadarParams& params, const RotorTarget& target,
                             std::size_t blade_index, double t,
                             std::size_t chirp_index);

// Maximum two-sided micro-Doppler spread (2 L_B Omega / c)(mu Tc + f0).
double md_max_spread(const RadarParams& params, const RotorTarget& target);

// Aliasing / spread classification of a scene.
struct AliasReport {
    double spread_hz = 0.0;               // max micro-Doppler spread
    double slow_time_occupancy_hz = 0.0;  // |f_D0| + spread/2
    double slow_time_limit_hz = 0.0;      // f_crf / 2
    double range_spread_bins = 0.0;       // spread / (mu/B)
    double doppler_spread_bins = 0.0;     // spread / (f_crf/L)
    double fast_time_occupancy_hz = 0.0;  // f_R0 + |f_D0| + spread/2
    double fast_time_limit_hz = 0.0;      // fs / 2
    bool slow_time_aliased = false;
    bool range_spread = false;
    bool doppler_spread = false;
    bool fast_time_ok = true;
};

AliasReport alias_report(const RadarParams& params, const RotorTarget& target);

}  // namespace mdkit

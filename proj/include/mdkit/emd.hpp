#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdkit/types.hpp"

// Empirical mode decomposition, real and complex. The complex variant
// builds envelopes from directional projections of the signal and feeds the
// IMF selection criteria that keep only components near the target range
// frequency.

namespace mdkit {

struct SiftConfig {
    double stop_threshold = 0.2;          // relaxed envelope-mean criterion
    std::size_t max_imfs = 4;             // decomposition stops early here
    std::size_t num_directions = 8;       // projection directions, complex variant
    std::size_t min_extrema = 2;          // residue below this stops sifting
    std::size_t max_sift_iterations = 50; // hard cap per IMF
    double amplitude_floor = 0.1;         // |imf| below floor*median is masked

    void validate() const;
};

template <typename T>
struct Decomposition {
    std::vector<std::vector<T>> imfs;  // ordered high frequency first
    std::vector<T> residue;

    std::size_t input_len() const { return residue.size(); }
};

using RealDecomposition = Decomposition<double>;
using ComplexDecomposition = Decomposition<cplx>;

// Instantaneous-frequency sequence with a validity mask (forward phase
// differences; element i covers samples i and i+1).
struct MaskedSeries {
    std::vector<double> values_hz;
    std::vector<std::uint8_t> valid;

    std::size_t valid_count() const;
    double mean() const;    // NaN when nothing is valid
    double stddev() const;  // population, over valid samples
};

// Per-IMF instantaneous-frequency statistics and the selection verdict.
struct ImfStats {
    std::size_t index = 0;             // 1-based IMF number
    double mean_inst_freq_hz = 0.0;
    double freq_deviation_hz = 0.0;    // |mean - target range frequency|
    double std_inst_freq_hz = 0.0;
    std::size_t samples_used = 0;
    bool selected = false;
};

// Classic sifting on a real signal: cubic-spline envelopes through maxima
// and minima, mean subtraction, relaxed stop criterion. Inputs that are too
// short or extrema-free come back as a bare residue with zero IMFs.
RealDecomposition sift_real(std::span<const double> signal, const SiftConfig& config);

// One complex sifting step: projects onto num_directions directions,
// interpolates the signal at each projection's maxima, subtracts the mean
// envelope. Directions with fewer than two maxima are left out of the mean;
// nullopt when no direction has enough.
std::optional<std::vector<cplx>> cemd_intermediate(std::span<const cplx> b,
                                                   const SiftConfig& config);

// Complex EMD: the sifting skeleton with the directional-envelope step,
// stopping after max_imfs.
ComplexDecomposition cemd_decompose(std::span<const cplx> signal,
                                    const SiftConfig& config);

// Instantaneous frequency from unwrapped-phase forward differences.
// Samples are invalidated where interp_mask is set or where |imf| falls
// below amplitude_floor * median|imf|. interp_mask may be empty (no mask).
MaskedSeries imf_inst_freq(std::span<const cplx> imf, double sample_rate_hz,
                           std::span<const std::uint8_t> interp_mask,
                           double amplitude_floor);

// Applies the proximity criteria: an IMF is selected when both its mean
// instantaneous-frequency deviation from center_freq_hz and its standard
// deviation stay below expected_spread_hz / 2.
std::vector<ImfStats> select_imfs(const ComplexDecomposition& decomp,
                                  double center_freq_hz, double expected_spread_hz,
                                  double sample_rate_hz,
                                  std::span<const std::uint8_t> interp_mask,
                                  double amplitude_floor);

// Sum of the selected IMFs. Throws NoSignatureError when the selection is
// empty: a scene whose in-band content is noise-only must not produce a
// spectrogram.
std::vector<cplx> reconstruct(const ComplexDecomposition& decomp,
                              const std::vector<ImfStats>& selection);

// Extrema utilities shared with the tests.
void find_extrema(std::span<const double> x, std::vector<std::size_t>& maxima,
                  std::vector<std::size_t>& minima);
std::size_t count_zero_crossings(std::span<const double> x);

}  // namespace mdkit

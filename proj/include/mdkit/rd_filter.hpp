#pragma once

#include "mdkit/spectral.hpp"
#include "mdkit/types.hpp"

// Gaussian range-Doppler filtering: isolates the desired target response in
// the RD plane, with bandwidths sized from the anticipated micro-Doppler
// frequency spread.

namespace mdkit {

struct GaussianRDFilter {
    double center_range_hz = 0.0;
    double center_doppler_hz = 0.0;
    double sigma_range_hz = 0.0;
    double sigma_doppler_hz = 0.0;
    // Unit gain across the whole Doppler axis. Used when the spread exceeds
    // f_crf and the signature wraps over the entire Doppler dimension; a
    // finite sigma would attenuate legitimately wrapped energy.
    bool doppler_all_pass = false;

    // Gain at (f_range, f_doppler). Doppler distance wraps circularly over
    // doppler_span_hz; range distance does not.
    double gain(double f_range_hz, double f_doppler_hz, double doppler_span_hz) const;
};

// Sizes the filter from the expected spread: range 3-dB cutoff
// f_c = max(spread/2, one range bin); Doppler all-pass when the spread
// exceeds f_crf, else a cutoff of max(spread/2, one Doppler bin).
// f_c relates to sigma as f_c = sqrt(log 2) * sigma.
GaussianRDFilter design_filter(const RDPeak& peak, double expected_spread_hz,
                               const RadarParams& params);

// Element-wise product of the map with the filter response.
RDMap apply_filter(const RDMap& map, const GaussianRDFilter& filter);

// rd_map -> apply_filter -> inverse_rd.
ChirpMatrix extract_filtered_time(const ChirpMatrix& chirps,
                                  const GaussianRDFilter& filter);

}  // namespace mdkit

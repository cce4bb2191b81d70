#include "mdkit/rd_filter.hpp"

#include <cmath>

#include "mdkit/kernels.hpp"

namespace mdkit {

namespace {
const double kSqrtLog2 = std::sqrt(std::log(2.0));

double wrapped_distance(double a, double b, double span) {
    double d = std::abs(a - b);
    if (span > 0.0) {
        d = std::fmod(d, span);
        if (d > span / 2.0) d = span - d;
    }
    return d;
}
}  // namespace

double GaussianRDFilter::gain(double f_range_hz, double f_doppler_hz,
                              double doppler_span_hz) const {
    const double dr = f_range_hz - center_range_hz;
    double g = std::exp(-(dr * dr) / (2.0 * sigma_range_hz * sigma_range_hz));
    if (!doppler_all_pass) {
        const double dd = wrapped_distance(f_doppler_hz, center_doppler_hz,
                                           doppler_span_hz);
        g *= std::exp(-(dd * dd) / (2.0 * sigma_doppler_hz * sigma_doppler_hz));
    }
    return g;
}

GaussianRDFilter design_filter(const RDPeak& peak, double expected_spread_hz,
                               const RadarParams& params) {
    GaussianRDFilter f;
    f.center_range_hz = peak.range_hz;
    f.center_doppler_hz = peak.doppler_hz;

    const double range_bin_hz = params.sample_rate_hz /
                                static_cast<double>(params.samples_per_chirp());
    const double fc_range = std::max(expected_spread_hz / 2.0, range_bin_hz);
    f.sigma_range_hz = fc_range / kSqrtLog2;

    const double f_crf = params.chirp_repetition_frequency_hz();
    if (expected_spread_hz > f_crf) {
        f.doppler_all_pass = true;
        f.sigma_doppler_hz = f_crf;  // unused when all-pass
    } else {
        const double doppler_bin_hz = f_crf / static_cast<double>(params.num_chirps);
        const double fc_doppler = std::max(expected_spread_hz / 2.0, doppler_bin_hz);
        f.sigma_doppler_hz = fc_doppler / kSqrtLog2;
    }
    return f;
}

RDMap apply_filter(const RDMap& map, const GaussianRDFilter& filter) {
    RDMap out;
    out.params = map.params;
    out.range_axis = map.range_axis;
    out.doppler_axis = map.doppler_axis;
    out.values = CMatrix(map.values.rows, map.values.cols);

    const double f_crf = map.params.chirp_repetition_frequency_hz();
    const std::size_t n_range = map.values.cols;
    const std::size_t n_doppler = map.values.rows;

    // The 2D Gaussian separates into per-axis gains.
    std::vector<double> g_range(n_range);
    for (std::size_t r = 0; r < n_range; ++r) {
        const double dr = map.range_axis[r] - filter.center_range_hz;
        g_range[r] =
            std::exp(-(dr * dr) / (2.0 * filter.sigma_range_hz * filter.sigma_range_hz));
    }
    std::vector<double> g_doppler(n_doppler, 1.0);
    if (!filter.doppler_all_pass) {
        for (std::size_t d = 0; d < n_doppler; ++d) {
            const double dd = wrapped_distance(map.doppler_axis[d],
                                               filter.center_doppler_hz, f_crf);
            g_doppler[d] = std::exp(
                -(dd * dd) / (2.0 * filter.sigma_doppler_hz * filter.sigma_doppler_hz));
        }
    }

    std::vector<double> row_gain(n_range);
    for (std::size_t d = 0; d < n_doppler; ++d) {
        for (std::size_t r = 0; r < n_range; ++r) row_gain[r] = g_doppler[d] * g_range[r];
        kernels::cmul_real(out.values.row(d).data(), map.values.row(d).data(),
                           row_gain.data(), n_range);
    }
    return out;
}

ChirpMatrix extract_filtered_time(const ChirpMatrix& chirps,
                                  const GaussianRDFilter& filter) {
    return inverse_rd(apply_filter(rd_map(chirps), filter));
}

}  // namespace mdkit

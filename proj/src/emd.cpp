#include "mdkit/emd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "mdkit/errors.hpp"
#include "mdkit/kernels.hpp"
#include "mdkit/spline.hpp"

namespace mdkit {

namespace {

constexpr std::size_t kMinSignalLen = 8;

// Builds spline knots from extrema, mirroring the two nearest extrema
// across each signal end; unmirrored splines diverge at the edges and
// corrupt the envelope mean.
void mirrored_knots(const std::vector<std::size_t>& idx, std::size_t len,
                    std::vector<double>& xs) {
    xs.clear();
    const std::size_t m = idx.size();
    const double end = static_cast<double>(len - 1);
    if (m >= 2 && idx[1] > 0) xs.push_back(-static_cast<double>(idx[1]));
    if (idx[0] > 0) xs.push_back(-static_cast<double>(idx[0]));
    for (std::size_t i : idx) xs.push_back(static_cast<double>(i));
    if (static_cast<double>(idx[m - 1]) < end) {
        xs.push_back(2.0 * end - static_cast<double>(idx[m - 1]));
    }
    if (m >= 2 && static_cast<double>(idx[m - 2]) < end) {
        xs.push_back(2.0 * end - static_cast<double>(idx[m - 2]));
    }
}

// ys[k] must follow the same mirrored layout as mirrored_knots.
template <typename Getter>
void mirrored_values(const std::vector<std::size_t>& idx, std::size_t len,
                     Getter get, std::vector<double>& ys) {
    ys.clear();
    const std::size_t m = idx.size();
    const double end = static_cast<double>(len - 1);
    if (m >= 2 && idx[1] > 0) ys.push_back(get(idx[1]));
    if (idx[0] > 0) ys.push_back(get(idx[0]));
    for (std::size_t i : idx) ys.push_back(get(i));
    if (static_cast<double>(idx[m - 1]) < end) ys.push_back(get(idx[m - 1]));
    if (m >= 2 && static_cast<double>(idx[m - 2]) < end) ys.push_back(get(idx[m - 2]));
}

void real_envelope(const std::vector<std::size_t>& idx,
                   std::span<const double> signal, std::vector<double>& out,
                   std::vector<double>& xs, std::vector<double>& ys) {
    mirrored_knots(idx, signal.size(), xs);
    mirrored_values(idx, signal.size(), [&](std::size_t i) { return signal[i]; }, ys);
    CubicSpline spline(xs, ys);
    out.resize(signal.size());
    spline.sample_grid(0.0, signal.size(), out.data());
}

double sift_sd(std::span<const cplx> prev, std::span<const cplx> cur) {
    double peak = 0.0;
    for (const auto& v : prev) peak = std::max(peak, std::norm(v));
    const double floor = 1e-12 * peak;
    double sd = 0.0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        const double num = std::norm(prev[i] - cur[i]);
        sd += num / std::max(std::norm(prev[i]), floor);
    }
    return sd;
}

double sift_sd(std::span<const double> prev, std::span<const double> cur) {
    double peak = 0.0;
    for (double v : prev) peak = std::max(peak, v * v);
    const double floor = 1e-12 * peak;
    double sd = 0.0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        const double d = prev[i] - cur[i];
        sd += d * d / std::max(prev[i] * prev[i], floor);
    }
    return sd;
}

std::size_t count_extrema(std::span<const double> x) {
    std::vector<std::size_t> maxima, minima;
    find_extrema(x, maxima, minima);
    return maxima.size() + minima.size();
}

bool imf_counts_balanced(std::span<const double> x) {
    const auto zc = static_cast<long long>(count_zero_crossings(x));
    const auto ext = static_cast<long long>(count_extrema(x));
    return std::llabs(zc - ext) <= 1;
}

}  // namespace

void SiftConfig::validate() const {
    if (stop_threshold <= 0.0) throw ConfigError("sift.stop_threshold must be > 0");
    if (max_imfs < 1) throw ConfigError("sift.max_imfs must be >= 1");
    if (num_directions < 4) throw ConfigError("sift.directions must be >= 4");
    if (min_extrema < 2) throw ConfigError("sift.min_extrema must be >= 2");
    if (max_sift_iterations < 1) throw ConfigError("sift.max_iterations must be >= 1");
}

void find_extrema(std::span<const double> x, std::vector<std::size_t>& maxima,
                  std::vector<std::size_t>& minima) {
    maxima.clear();
    minima.clear();
    const std::size_t n = x.size();
    if (n < 3) return;
    int dir = 0;
    std::size_t run_start = 0;  // start of the run holding x[i-1]
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] == x[i - 1]) continue;
        const int d = x[i] > x[i - 1] ? 1 : -1;
        if (dir == 1 && d == -1) {
            maxima.push_back((run_start + i - 1) / 2);  // plateau midpoint
        } else if (dir == -1 && d == 1) {
            minima.push_back((run_start + i - 1) / 2);
        }
        dir = d;
        run_start = i;
    }
}

std::size_t count_zero_crossings(std::span<const double> x) {
    std::size_t crossings = 0;
    int prev_sign = 0;
    for (double v : x) {
        const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (s == 0) continue;
        if (prev_sign != 0 && s != prev_sign) ++crossings;
        prev_sign = s;
    }
    return crossings;
}

RealDecomposition sift_real(std::span<const double> signal, const SiftConfig& config) {
    config.validate();
    RealDecomposition out;
    out.residue.assign(signal.begin(), signal.end());
    if (signal.size() < kMinSignalLen) return out;

    std::vector<std::size_t> maxima, minima;
    std::vector<double> b, prev, emax, emin, xs, ys;
    while (out.imfs.size() < config.max_imfs) {
        find_extrema(out.residue, maxima, minima);
        if (maxima.size() + minima.size() < config.min_extrema) break;

        b = out.residue;
        for (std::size_t j = 0; j < config.max_sift_iterations; ++j) {
            find_extrema(b, maxima, minima);
            if (maxima.size() < 2 || minima.size() < 2) break;
            real_envelope(maxima, b, emax, xs, ys);
            real_envelope(minima, b, emin, xs, ys);
            prev = b;
            for (std::size_t i = 0; i < b.size(); ++i) {
                b[i] -= 0.5 * (emax[i] + emin[i]);
            }
            if (sift_sd(prev, b) < config.stop_threshold && imf_counts_balanced(b)) {
                break;
            }
        }
        for (std::size_t i = 0; i < b.size(); ++i) out.residue[i] -= b[i];
        out.imfs.push_back(std::move(b));
        b.clear();
    }
    return out;
}

namespace {

// Directional-envelope state reused across sifting iterations.
struct CemdWorkspace {
    std::vector<double> projection;
    std::vector<std::size_t> maxima, minima;
    std::vector<double> xs, ys_re, ys_im, env_re, env_im;
    std::vector<cplx> env_sum;

    // b - mean_k(envelope_k); false when no direction has >= 2 maxima.
    bool step(std::span<const cplx> b, const SiftConfig& config,
              std::vector<cplx>& out) {
        const std::size_t n = b.size();
        projection.resize(n);
        env_sum.assign(n, cplx{0.0, 0.0});
        std::size_t valid = 0;
        for (std::size_t k = 1; k <= config.num_directions; ++k) {
            const double phi = 2.0 * kPi * static_cast<double>(k) /
                               static_cast<double>(config.num_directions);
            kernels::project_real(projection.data(), b.data(), std::cos(phi),
                                  std::sin(phi), n);
            find_extrema(projection, maxima, minima);
            if (maxima.size() < 2) continue;
            mirrored_knots(maxima, n, xs);
            mirrored_values(maxima, n, [&](std::size_t i) { return b[i].real(); },
                            ys_re);
            mirrored_values(maxima, n, [&](std::size_t i) { return b[i].imag(); },
                            ys_im);
            CubicSpline sre(xs, ys_re);
            CubicSpline sim(xs, ys_im);
            env_re.resize(n);
            env_im.resize(n);
            sre.sample_grid(0.0, n, env_re.data());
            sim.sample_grid(0.0, n, env_im.data());
            for (std::size_t i = 0; i < n; ++i) {
                env_sum[i] += cplx{env_re[i], env_im[i]};
            }
            ++valid;
        }
        if (valid == 0) return false;
        out.resize(n);
        kernels::csub_scaled(out.data(), b.data(), env_sum.data(),
                             1.0 / static_cast<double>(valid), n);
        return true;
    }

    // Largest maxima count over all projection directions.
    std::size_t best_direction_extrema(std::span<const cplx> b,
                                       const SiftConfig& config) {
        const std::size_t n = b.size();
        projection.resize(n);
        std::size_t best = 0;
        for (std::size_t k = 1; k <= config.num_directions; ++k) {
            const double phi = 2.0 * kPi * static_cast<double>(k) /
                               static_cast<double>(config.num_directions);
            kernels::project_real(projection.data(), b.data(), std::cos(phi),
                                  std::sin(phi), n);
            find_extrema(projection, maxima, minima);
            best = std::max(best, maxima.size());
        }
        return best;
    }
};

}  // namespace

std::optional<std::vector<cplx>> cemd_intermediate(std::span<const cplx> b,
                                                   const SiftConfig& config) {
    config.validate();
    CemdWorkspace ws;
    std::vector<cplx> out;
    if (!ws.step(b, config, out)) return std::nullopt;
    return out;
}

ComplexDecomposition cemd_decompose(std::span<const cplx> signal,
                                    const SiftConfig& config) {
    config.validate();
    ComplexDecomposition out;
    out.residue.assign(signal.begin(), signal.end());
    if (signal.size() < kMinSignalLen) return out;

    CemdWorkspace ws;
    std::vector<cplx> b, next;
    while (out.imfs.size() < config.max_imfs) {
        if (ws.best_direction_extrema(out.residue, config) < config.min_extrema) break;

        b = out.residue;
        bool stepped = false;
        for (std::size_t j = 0; j < config.max_sift_iterations; ++j) {
            if (!ws.step(b, config, next)) break;
            const double sd = sift_sd(b, next);
            b.swap(next);
            stepped = true;
            if (sd < config.stop_threshold) break;
        }
        if (!stepped) break;
        for (std::size_t i = 0; i < b.size(); ++i) out.residue[i] -= b[i];
        out.imfs.push_back(std::move(b));
        b.clear();
    }
    return out;
}

std::size_t MaskedSeries::valid_count() const {
    std::size_t c = 0;
    for (auto v : valid) c += v ? 1 : 0;
    return c;
}

double MaskedSeries::mean() const {
    double sum = 0.0;
    std::size_t c = 0;
    for (std::size_t i = 0; i < values_hz.size(); ++i) {
        if (valid[i]) {
            sum += values_hz[i];
            ++c;
        }
    }
    return c ? sum / static_cast<double>(c)
             : std::numeric_limits<double>::quiet_NaN();
}

double MaskedSeries::stddev() const {
    const double m = mean();
    if (!std::isfinite(m)) return std::numeric_limits<double>::quiet_NaN();
    double sum = 0.0;
    std::size_t c = 0;
    for (std::size_t i = 0; i < values_hz.size(); ++i) {
        if (valid[i]) {
            const double d = values_hz[i] - m;
            sum += d * d;
            ++c;
        }
    }
    return std::sqrt(sum / static_cast<double>(c));
}

MaskedSeries imf_inst_freq(std::span<const cplx> imf, double sample_rate_hz,
                           std::span<const std::uint8_t> interp_mask,
                           double amplitude_floor) {
    if (!interp_mask.empty() && interp_mask.size() != imf.size()) {
        throw std::invalid_argument("imf_inst_freq: mask length mismatch");
    }
    MaskedSeries out;
    if (imf.size() < 2) return out;

    std::vector<double> mag(imf.size());
    kernels::mag_sq(mag.data(), imf.data(), imf.size());
    for (auto& m : mag) m = std::sqrt(m);
    std::vector<double> sorted = mag;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double floor = amplitude_floor * median;

    const std::size_t n = imf.size() - 1;
    out.values_hz.resize(n);
    out.valid.resize(n);
    const double scale = sample_rate_hz / (2.0 * kPi);
    double prev_arg = std::arg(imf[0]);
    for (std::size_t i = 0; i < n; ++i) {
        const double cur_arg = std::arg(imf[i + 1]);
        double dphi = cur_arg - prev_arg;
        while (dphi > kPi) dphi -= 2.0 * kPi;
        while (dphi < -kPi) dphi += 2.0 * kPi;
        prev_arg = cur_arg;
        out.values_hz[i] = dphi * scale;
        const bool interp =
            !interp_mask.empty() && (interp_mask[i] || interp_mask[i + 1]);
        out.valid[i] = (!interp && mag[i] >= floor && mag[i + 1] >= floor) ? 1 : 0;
    }
    return out;
}

std::vector<ImfStats> select_imfs(const ComplexDecomposition& decomp,
                                  double center_freq_hz, double expected_spread_hz,
                                  double sample_rate_hz,
                                  std::span<const std::uint8_t> interp_mask,
                                  double amplitude_floor) {
    if (!(expected_spread_hz > 0.0)) {
        throw std::invalid_argument("select_imfs: expected spread must be > 0");
    }
    std::vector<ImfStats> stats;
    stats.reserve(decomp.imfs.size());
    const double half_spread = expected_spread_hz / 2.0;
    double prev_mean = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < decomp.imfs.size(); ++i) {
        MaskedSeries f =
            imf_inst_freq(decomp.imfs[i], sample_rate_hz, interp_mask, amplitude_floor);
        ImfStats s;
        s.index = i + 1;
        s.samples_used = f.valid_count();
        if (s.samples_used == 0) {
            s.mean_inst_freq_hz = std::numeric_limits<double>::quiet_NaN();
            s.freq_deviation_hz = std::numeric_limits<double>::infinity();
            s.std_inst_freq_hz = std::numeric_limits<double>::infinity();
            s.selected = false;
        } else {
            s.mean_inst_freq_hz = f.mean();
            s.freq_deviation_hz = std::abs(s.mean_inst_freq_hz - center_freq_hz);
            s.std_inst_freq_hz = f.stddev();
            s.selected = s.freq_deviation_hz < half_spread &&
                         s.std_inst_freq_hz < half_spread;
        }
        if (std::isfinite(s.mean_inst_freq_hz) &&
            s.mean_inst_freq_hz > prev_mean + 1e-9 * std::abs(prev_mean)) {
            std::fprintf(stderr,
                         "mdkit: warning: IMF %zu mean instantaneous frequency "
                         "(%.3f Hz) exceeds IMF %zu (%.3f Hz)\n",
                         s.index, s.mean_inst_freq_hz, s.index - 1, prev_mean);
        }
        if (std::isfinite(s.mean_inst_freq_hz)) prev_mean = s.mean_inst_freq_hz;
        stats.push_back(s);
    }
    return stats;
}

std::vector<cplx> reconstruct(const ComplexDecomposition& decomp,
                              const std::vector<ImfStats>& selection) {
    std::vector<cplx> out(decomp.input_len(), cplx{0.0, 0.0});
    std::size_t used = 0;
    for (const auto& s : selection) {
        if (!s.selected) continue;
        const auto& imf = decomp.imfs.at(s.index - 1);
        kernels::caxpy(out.data(), cplx{1.0, 0.0}, imf.data(), imf.size());
        ++used;
    }
    if (used == 0) {
        throw NoSignatureError("no IMF passed the selection criteria; "
                               "no micro-Doppler signature found");
    }
    return out;
}

}  // namespace mdkit

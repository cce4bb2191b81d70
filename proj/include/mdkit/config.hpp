#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "mdkit/capture.hpp"
#include "mdkit/emd.hpp"
#include "mdkit/types.hpp"

// Run configuration: line-oriented "key = value" text with [section]
// headers, '#' comments. The run manifest written next to the outputs uses
// the same schema, so a finished run can be replayed from its manifest.

namespace mdkit {

enum class PipelineMode { Simulate, Stmdse, FtmdseRaw, Proposed };

const char* pipeline_mode_name(PipelineMode mode);
PipelineMode parse_pipeline_mode(const std::string& name);

struct StftConfig {
    std::size_t window = 512;      // fast-time window, samples
    double overlap = 0.9;
    std::size_t slow_window = 64;  // slow-time window for the stmdse path
    std::size_t pad_factor = 1;
};

struct SceneConfig {
    double snr_db = std::numeric_limits<double>::infinity();
    double blade_body_ratio_db = -6.0;
    std::uint64_t seed = 1;
};

struct RunConfig {
    RadarParams radar;
    std::optional<RotorTarget> target;       // simulation input
    std::optional<std::string> capture_path; // measured input
    CaptureLayout capture_layout;
    SceneConfig scene;
    PipelineMode mode = PipelineMode::Proposed;
    // Maximum anticipated micro-Doppler spread; defaults to the closed-form
    // value of the simulated target when absent.
    std::optional<double> expected_spread_hz;
    // A-priori target range/velocity, overriding the RD peak pick.
    std::optional<double> target_range_m;
    std::optional<double> target_velocity_mps;
    bool demodulate = false;                  // ftmdse-raw path only
    std::optional<std::size_t> stmdse_range_bin;
    StftConfig stft;
    SiftConfig sift;
    std::string output_dir = "out";

    void validate() const;
};

// Parses and validates; every failure names the offending section.key.
RunConfig load_config(const std::filesystem::path& path);

// Extra values recorded in the manifest's [derived] section.
struct DerivedInfo {
    std::size_t samples_per_chirp = 0;
    std::size_t idle_samples = 0;
    double f_crf_hz = 0.0;
    double bandwidth_hz = 0.0;
    double wavelength_m = 0.0;
    double range_bin_size_m = 0.0;
    std::optional<double> delta_f_md_hz;
    std::optional<double> expected_spread_hz;
    std::optional<double> peak_range_hz;
    std::optional<double> peak_doppler_hz;
    std::optional<bool> slow_time_aliased;
};

// Serializes the full configuration (plus [derived], which the loader
// ignores) so the run can be reproduced bit-identically.
void write_manifest(const std::filesystem::path& path, const RunConfig& config,
                    const DerivedInfo& derived);

}  // namespace mdkit

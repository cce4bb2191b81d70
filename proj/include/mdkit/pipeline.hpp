#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "mdkit/assembly.hpp"
#include "mdkit/config.hpp"
#include "mdkit/emd.hpp"
#include "mdkit/rd_filter.hpp"
#include "mdkit/spectral.hpp"
#include "mdkit/synth.hpp"

// Pipeline orchestration. The proposed path runs
//   synth/ingest -> rd_map -> peak (or a-priori override) -> design_filter
//   -> filtered time extraction -> linear-fit appending -> complex EMD
//   -> IMF selection -> reconstruction -> spectrogram
// and writes rd_map_pre.csv, rd_map_post.csv, imf_stats.csv,
// spectrogram.csv plus a replayable manifest. The stmdse and ftmdse-raw
// paths run the corresponding comparison chains.

namespace mdkit {

struct PipelineResult {
    PipelineMode mode = PipelineMode::Proposed;
    RadarParams radar;
    std::optional<AliasReport> alias;      // simulated targets only
    RDPeak peak;
    double expected_spread_hz = 0.0;
    double center_freq_hz = 0.0;           // selection reference frequency
    RDMap rd_pre;
    std::optional<RDMap> rd_post;
    std::optional<FastTimeStream> stream;
    std::optional<ComplexDecomposition> decomposition;
    std::vector<ImfStats> imf_stats;
    std::vector<cplx> reconstructed;
    std::optional<Spectrogram> spectrum;
    std::filesystem::path output_dir;
    std::vector<std::filesystem::path> files_written;
};

// Runs the configured pipeline and writes the result bundle under
// config.output_dir. Propagates NoSignatureError when IMF selection comes
// back empty on the proposed path.
PipelineResult run_pipeline(const RunConfig& config);

// Spectrogram frame times remapped through the stream's per-chirp time
// bookkeeping, so downstream periodicity reads in true time.
void retime_frames(Spectrogram& spec, const FastTimeStream& stream);

}  // namespace mdkit

#pragma once

#include <filesystem>
#include <vector>

#include "mdkit/emd.hpp"
#include "mdkit/spectral.hpp"

// CSV exports ('.' decimal, scientific notation allowed). Matrix files carry
// their axes: the first row is the frequency axis, the first column the
// Doppler axis or frame time. Files are written atomically (temp + rename).

namespace mdkit {

// Magnitude of the RD map; header row = range axis (Hz), first column =
// Doppler axis (Hz).
void write_rd_map_csv(const std::filesystem::path& path, const RDMap& map);

// dB magnitudes; header row = frequency axis (Hz), first column = frame
// time (s).
void write_spectrogram_csv(const std::filesystem::path& path, const Spectrogram& spec);

void write_imf_stats_csv(const std::filesystem::path& path,
                         const std::vector<ImfStats>& stats);

}  // namespace mdkit

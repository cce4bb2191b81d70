#pragma once

#include <cstdint>
#include <filesystem>

#include "mdkit/types.hpp"

// Raw ADC capture container: signed 16-bit samples, I-then-Q interleaved per
// sample, chirp-major order, read back as unit-scaled complex values
// (divide by 32768). The layout is declared, never sniffed.

namespace mdkit {

struct CaptureLayout {
    std::size_t chirps = 0;
    std::size_t samples_per_chirp = 0;
    bool q_first = false;        // I-then-Q unless set
    std::size_t int_width = 2;   // bytes per integer; only 2 is supported
    bool little_endian = true;

    std::size_t expected_bytes() const {
        return chirps * samples_per_chirp * 2 * int_width;
    }
};

// Throws CaptureError when the file size does not match the layout exactly.
ChirpMatrix read_adc_capture(const std::filesystem::path& path,
                             const CaptureLayout& layout,
                             const RadarParams& params);

// Quantizes to the same container format; read_adc_capture followed by
// write_capture reproduces the file byte for byte.
void write_capture(const std::filesystem::path& path, const ChirpMatrix& chirps,
                   const CaptureLayout& layout);

}  // namespace mdkit

#include "mdkit/capture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

#include "mdkit/errors.hpp"

namespace mdkit {

namespace {

constexpr double kScale = 32768.0;

std::int16_t decode_sample(const unsigned char* p, bool little_endian) {
    const std::uint16_t u = little_endian
                                ? static_cast<std::uint16_t>(p[0] | (p[1] << 8))
                                : static_cast<std::uint16_t>((p[0] << 8) | p[1]);
    return static_cast<std::int16_t>(u);
}

void encode_sample(std::int16_t v, unsigned char* p, bool little_endian) {
    const std::uint16_t u = static_cast<std::uint16_t>(v);
    if (little_endian) {
        p[0] = static_cast<unsigned char>(u & 0xFF);
        p[1] = static_cast<unsigned char>(u >> 8);
    } else {
        p[0] = static_cast<unsigned char>(u >> 8);
        p[1] = static_cast<unsigned char>(u & 0xFF);
    }
}

std::int16_t quantize(double v) {
    const long long q = std::llround(v * kScale);
    return static_cast<std::int16_t>(std::clamp<long long>(q, -32768, 32767));
}

void check_layout(const CaptureLayout& layout) {
    if (layout.int_width != 2) {
        throw CaptureError("capture layout: only 16-bit integer samples are supported");
    }
    if (layout.chirps == 0 || layout.samples_per_chirp == 0) {
        throw CaptureError("capture layout: chirps and samples_per_chirp must be > 0");
    }
}

}  // namespace

ChirpMatrix read_adc_capture(const std::filesystem::path& path,
                             const CaptureLayout& layout,
                             const RadarParams& params) {
    check_layout(layout);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CaptureError("capture file not readable: " + path.string());
    in.seekg(0, std::ios::end);
    const auto actual = static_cast<std::size_t>(in.tellg());
    const std::size_t expected = layout.expected_bytes();
    if (actual != expected) {
        throw CaptureError("capture size mismatch for " + path.string() +
                           ": expected " + std::to_string(expected) + " bytes, got " +
                           std::to_string(actual));
    }
    in.seekg(0, std::ios::beg);
    std::vector<unsigned char> raw(actual);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(actual));
    if (!in) throw CaptureError("capture read failed: " + path.string());

    ChirpMatrix out;
    out.params = params;
    out.samples = CMatrix(layout.chirps, layout.samples_per_chirp);
    const unsigned char* p = raw.data();
    for (auto& v : out.samples.data) {
        const double first = decode_sample(p, layout.little_endian) / kScale;
        const double second = decode_sample(p + 2, layout.little_endian) / kScale;
        v = layout.q_first ? cplx{second, first} : cplx{first, second};
        p += 4;
    }
    return out;
}

void write_capture(const std::filesystem::path& path, const ChirpMatrix& chirps,
                   const CaptureLayout& layout) {
    check_layout(layout);
    if (chirps.samples.rows != layout.chirps ||
        chirps.samples.cols != layout.samples_per_chirp) {
        throw CaptureError("capture layout dimensions do not match the chirp matrix");
    }
    std::vector<unsigned char> raw(layout.expected_bytes());
    unsigned char* p = raw.data();
    for (const auto& v : chirps.samples.data) {
        const std::int16_t i = quantize(v.real());
        const std::int16_t q = quantize(v.imag());
        encode_sample(layout.q_first ? q : i, p, layout.little_endian);
        encode_sample(layout.q_first ? i : q, p + 2, layout.little_endian);
        p += 4;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CaptureError("capture file not writable: " + path.string());
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
    if (!out) throw CaptureError("capture write failed: " + path.string());
}

}  // namespace mdkit

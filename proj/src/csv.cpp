#include "mdkit/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mdkit/errors.hpp"

namespace mdkit {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw ConfigError("output file not writable: " + path.string());
        f << content;
        if (!f) throw ConfigError("write failed: " + path.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

void write_rd_map_csv(const std::filesystem::path& path, const RDMap& map) {
    std::ostringstream out;
    out << "doppler_hz\\range_hz";
    for (double f : map.range_axis) out << "," << fmt(f);
    out << "\n";
    for (std::size_t d = 0; d < map.values.rows; ++d) {
        out << fmt(map.doppler_axis[d]);
        for (std::size_t r = 0; r < map.values.cols; ++r) {
            out << "," << fmt(std::abs(map.values.at(d, r)));
        }
        out << "\n";
    }
    atomic_write(path, out.str());
}

void write_spectrogram_csv(const std::filesystem::path& path, const Spectrogram& spec) {
    std::ostringstream out;
    out << "time_s\\freq_hz";
    for (double f : spec.freq_axis) out << "," << fmt(f);
    out << "\n";
    for (std::size_t i = 0; i < spec.magnitude_db.size(); ++i) {
        out << fmt(spec.frame_times[i]);
        for (double v : spec.magnitude_db[i]) out << "," << fmt(v);
        out << "\n";
    }
    atomic_write(path, out.str());
}

void write_imf_stats_csv(const std::filesystem::path& path,
                         const std::vector<ImfStats>& stats) {
    std::ostringstream out;
    out << "imf,mean_inst_freq_hz,freq_deviation_hz,std_inst_freq_hz,"
           "samples_used,selected\n";
    for (const auto& s : stats) {
        out << s.index << "," << fmt(s.mean_inst_freq_hz) << ","
            << fmt(s.freq_deviation_hz) << "," << fmt(s.std_inst_freq_hz) << ","
            << s.samples_used << "," << (s.selected ? 1 : 0) << "\n";
    }
    atomic_write(path, out.str());
}

}  // namespace mdkit

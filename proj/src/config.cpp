#include "mdkit/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "mdkit/errors.hpp"

namespace mdkit {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Parsed key/value store with per-key consumption tracking, so unknown keys
// can be reported with their section.
class KvStore {
public:
    void insert(const std::string& section, const std::string& key,
                const std::string& value, int line) {
        entries_[section + "." + key] = {value, line, false};
    }

    std::optional<std::string> take(const std::string& qualified) {
        auto it = entries_.find(qualified);
        if (it == entries_.end()) return std::nullopt;
        it->second.used = true;
        return it->second.value;
    }

    bool has_section(const std::string& section) const {
        const std::string prefix = section + ".";
        for (const auto& [k, v] : entries_) {
            if (k.rfind(prefix, 0) == 0) return true;
        }
        return false;
    }

    void check_all_used(const std::set<std::string>& ignored_sections) const {
        for (const auto& [k, v] : entries_) {
            const std::string section = k.substr(0, k.find('.'));
            if (v.used || ignored_sections.count(section)) continue;
            throw ConfigError("unknown config key '" + k + "' (line " +
                              std::to_string(v.line) + ")");
        }
    }

private:
    struct Entry {
        std::string value;
        int line = 0;
        bool used = false;
    };
    std::map<std::string, Entry> entries_;
};

KvStore parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file not readable: " + path.string());
    KvStore store;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) {
                throw ConfigError("empty section name at line " + std::to_string(lineno));
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value' at line " + std::to_string(lineno) +
                              " of " + path.string());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("empty key at line " + std::to_string(lineno));
        }
        if (section.empty()) {
            throw ConfigError("key '" + key + "' outside any [section] at line " +
                              std::to_string(lineno));
        }
        store.insert(section, key, value, lineno);
    }
    return store;
}

double parse_double(const std::string& qualified, const std::string& text) {
    const std::string t = trim(text);
    if (t == "inf" || t == "+inf" || t == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    try {
        std::size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + qualified + "': cannot parse '" + text +
                          "' as a number");
    }
}

std::uint64_t parse_uint(const std::string& qualified, const std::string& text) {
    const double v = parse_double(qualified, text);
    if (v < 0.0 || v != std::floor(v)) {
        throw ConfigError("config key '" + qualified +
                          "': expected a non-negative integer, got '" + text + "'");
    }
    return static_cast<std::uint64_t>(v);
}

bool parse_bool(const std::string& qualified, const std::string& text) {
    std::string t = trim(text);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    throw ConfigError("config key '" + qualified + "': expected a boolean, got '" +
                      text + "'");
}

std::vector<double> parse_list(const std::string& qualified, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        out.push_back(parse_double(qualified, item));
    }
    return out;
}

struct Reader {
    KvStore& store;

    std::optional<std::string> raw(const std::string& q) { return store.take(q); }

    double number(const std::string& q, double fallback) {
        auto v = store.take(q);
        return v ? parse_double(q, *v) : fallback;
    }
    std::optional<double> number_opt(const std::string& q) {
        auto v = store.take(q);
        if (!v) return std::nullopt;
        return parse_double(q, *v);
    }
    double required_number(const std::string& q) {
        auto v = store.take(q);
        if (!v) throw ConfigError("missing mandatory config key '" + q + "'");
        return parse_double(q, *v);
    }
    std::uint64_t uinteger(const std::string& q, std::uint64_t fallback) {
        auto v = store.take(q);
        return v ? parse_uint(q, *v) : fallback;
    }
    bool boolean(const std::string& q, bool fallback) {
        auto v = store.take(q);
        return v ? parse_bool(q, *v) : fallback;
    }
};

}  // namespace

const char* pipeline_mode_name(PipelineMode mode) {
    switch (mode) {
        case PipelineMode::Simulate: return "simulate";
        case PipelineMode::Stmdse: return "stmdse";
        case PipelineMode::FtmdseRaw: return "ftmdse-raw";
        case PipelineMode::Proposed: return "proposed";
    }
    return "proposed";
}

PipelineMode parse_pipeline_mode(const std::string& name) {
    if (name == "simulate") return PipelineMode::Simulate;
    if (name == "stmdse") return PipelineMode::Stmdse;
    if (name == "ftmdse-raw" || name == "ftmdse_raw") return PipelineMode::FtmdseRaw;
    if (name == "proposed") return PipelineMode::Proposed;
    throw ConfigError("pipeline.mode: unknown mode '" + name +
                      "' (expected simulate|stmdse|ftmdse-raw|proposed)");
}

void RunConfig::validate() const {
    radar.validate();
    if (target.has_value() == capture_path.has_value()) {
        throw ConfigError(
            "exactly one of [target] and [capture].path must drive the run");
    }
    if (target) target->validate();
    if (capture_path) {
        if (!std::filesystem::exists(*capture_path)) {
            throw ConfigError("capture.path does not exist: " + *capture_path);
        }
        if (!expected_spread_hz && mode == PipelineMode::Proposed) {
            throw ConfigError(
                "pipeline.expected_spread_hz is mandatory for capture runs "
                "(maximum anticipated micro-Doppler spread)");
        }
    }
    if (expected_spread_hz && *expected_spread_hz < 0.0) {
        throw ConfigError("pipeline.expected_spread_hz must be >= 0");
    }
    if (stft.window == 0) throw ConfigError("stft.window must be > 0");
    if (stft.slow_window == 0) throw ConfigError("stft.slow_window must be > 0");
    if (stft.overlap < 0.0 || stft.overlap >= 1.0) {
        throw ConfigError("stft.overlap must be in [0, 1)");
    }
    if (stft.pad_factor == 0) throw ConfigError("stft.pad_factor must be >= 1");
    sift.validate();
    if (stmdse_range_bin && *stmdse_range_bin >= radar.samples_per_chirp()) {
        throw ConfigError("pipeline.stmdse_range_bin out of range");
    }
    if (target_range_m && *target_range_m <= 0.0) {
        throw ConfigError("pipeline.target_range_m must be > 0");
    }
}

RunConfig load_config(const std::filesystem::path& path) {
    KvStore store = parse_file(path);
    Reader r{store};
    RunConfig cfg;

    cfg.radar.start_frequency_hz = r.required_number("radar.start_frequency_hz");
    cfg.radar.chirp_rate_hz_per_s = r.required_number("radar.chirp_rate_hz_per_s");
    cfg.radar.chirp_duration_s = r.required_number("radar.chirp_duration_s");
    cfg.radar.chirp_repetition_interval_s =
        r.required_number("radar.chirp_repetition_interval_s");
    cfg.radar.sample_rate_hz = r.required_number("radar.sample_rate_hz");
    if (auto v = r.raw("radar.num_chirps")) {
        cfg.radar.num_chirps =
            static_cast<std::size_t>(parse_uint("radar.num_chirps", *v));
    } else {
        throw ConfigError("missing mandatory config key 'radar.num_chirps'");
    }
    cfg.radar.propagation_speed =
        r.number("radar.propagation_speed_mps", kDefaultPropagationSpeed);

    if (store.has_section("target")) {
        RotorTarget t;
        t.range_m = r.required_number("target.range_m");
        t.radial_velocity_mps = r.number("target.velocity_mps", 0.0);
        t.body_amplitude = r.number("target.body_amplitude", 1.0);
        t.num_blades = static_cast<std::size_t>(r.uinteger("target.num_blades", 0));
        t.blade_length_m = r.number("target.blade_length_m", 0.0);
        const double rpm = r.number("target.rotation_rpm", 0.0);
        t.rotation_rate_rad_s = rpm * 2.0 * kPi / 60.0;
        t.elevation_rad = r.number("target.elevation_deg", 0.0) * kPi / 180.0;
        if (auto v = r.raw("target.blade_offsets_deg")) {
            auto degs = parse_list("target.blade_offsets_deg", *v);
            if (degs.size() != t.num_blades) {
                throw ConfigError(
                    "target.blade_offsets_deg must list exactly target.num_blades "
                    "angles");
            }
            t.initial_offsets_rad.clear();
            for (double d : degs) t.initial_offsets_rad.push_back(d * kPi / 180.0);
        } else {
            t.default_offsets();
        }
        cfg.target = std::move(t);
    }

    cfg.scene.snr_db = r.number("scene.snr_db", cfg.scene.snr_db);
    cfg.scene.blade_body_ratio_db =
        r.number("scene.blade_body_ratio_db", cfg.scene.blade_body_ratio_db);
    cfg.scene.seed = r.uinteger("scene.seed", cfg.scene.seed);

    if (auto v = r.raw("pipeline.mode")) cfg.mode = parse_pipeline_mode(*v);
    cfg.expected_spread_hz = r.number_opt("pipeline.expected_spread_hz");
    cfg.target_range_m = r.number_opt("pipeline.target_range_m");
    cfg.target_velocity_mps = r.number_opt("pipeline.target_velocity_mps");
    cfg.demodulate = r.boolean("pipeline.demodulate", false);
    if (auto v = r.raw("pipeline.stmdse_range_bin")) {
        cfg.stmdse_range_bin =
            static_cast<std::size_t>(parse_uint("pipeline.stmdse_range_bin", *v));
    }

    cfg.stft.window = static_cast<std::size_t>(r.uinteger("stft.window", 512));
    cfg.stft.overlap = r.number("stft.overlap", 0.9);
    cfg.stft.slow_window = static_cast<std::size_t>(r.uinteger("stft.slow_window", 64));
    cfg.stft.pad_factor = static_cast<std::size_t>(r.uinteger("stft.pad_factor", 1));

    cfg.sift.stop_threshold = r.number("sift.stop_threshold", 0.2);
    cfg.sift.max_imfs = static_cast<std::size_t>(r.uinteger("sift.max_imfs", 4));
    cfg.sift.num_directions = static_cast<std::size_t>(r.uinteger("sift.directions", 8));
    cfg.sift.min_extrema = static_cast<std::size_t>(r.uinteger("sift.min_extrema", 2));
    cfg.sift.max_sift_iterations =
        static_cast<std::size_t>(r.uinteger("sift.max_iterations", 50));
    cfg.sift.amplitude_floor = r.number("sift.amplitude_floor", 0.1);

    if (auto v = r.raw("capture.path")) {
        cfg.capture_path = *v;
        cfg.capture_layout.chirps =
            static_cast<std::size_t>(r.uinteger("capture.chirps", cfg.radar.num_chirps));
        cfg.capture_layout.samples_per_chirp = static_cast<std::size_t>(
            r.uinteger("capture.samples_per_chirp", cfg.radar.samples_per_chirp()));
        if (auto order = r.raw("capture.iq_order")) {
            if (*order == "iq") cfg.capture_layout.q_first = false;
            else if (*order == "qi") cfg.capture_layout.q_first = true;
            else throw ConfigError("capture.iq_order must be 'iq' or 'qi'");
        }
        cfg.capture_layout.int_width =
            static_cast<std::size_t>(r.uinteger("capture.int_width", 2));
        if (auto endian = r.raw("capture.endianness")) {
            if (*endian == "little") cfg.capture_layout.little_endian = true;
            else if (*endian == "big") cfg.capture_layout.little_endian = false;
            else throw ConfigError("capture.endianness must be 'little' or 'big'");
        }
    }

    if (auto v = r.raw("output.dir")) cfg.output_dir = *v;

    store.check_all_used({"derived"});
    cfg.validate();
    return cfg;
}

namespace {

std::string fmt_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_manifest(const std::filesystem::path& path, const RunConfig& config,
                    const DerivedInfo& derived) {
    std::ostringstream out;
    out << "# mdkit run manifest; replay with: mdkit run --config <this file>\n";
    out << "[radar]\n";
    out << "start_frequency_hz = " << fmt_number(config.radar.start_frequency_hz) << "\n";
    out << "chirp_rate_hz_per_s = " << fmt_number(config.radar.chirp_rate_hz_per_s)
        << "\n";
    out << "chirp_duration_s = " << fmt_number(config.radar.chirp_duration_s) << "\n";
    out << "chirp_repetition_interval_s = "
        << fmt_number(config.radar.chirp_repetition_interval_s) << "\n";
    out << "sample_rate_hz = " << fmt_number(config.radar.sample_rate_hz) << "\n";
    out << "num_chirps = " << config.radar.num_chirps << "\n";
    out << "propagation_speed_mps = " << fmt_number(config.radar.propagation_speed)
        << "\n";

    if (config.target) {
        const RotorTarget& t = *config.target;
        out << "\n[target]\n";
        out << "range_m = " << fmt_number(t.range_m) << "\n";
        out << "velocity_mps = " << fmt_number(t.radial_velocity_mps) << "\n";
        out << "body_amplitude = " << fmt_number(t.body_amplitude) << "\n";
        out << "num_blades = " << t.num_blades << "\n";
        out << "blade_length_m = " << fmt_number(t.blade_length_m) << "\n";
        out << "rotation_rpm = " << fmt_number(t.rotation_rate_rad_s * 60.0 / (2.0 * kPi))
            << "\n";
        out << "elevation_deg = " << fmt_number(t.elevation_rad * 180.0 / kPi) << "\n";
        if (!t.initial_offsets_rad.empty()) {
            out << "blade_offsets_deg = ";
            for (std::size_t b = 0; b < t.initial_offsets_rad.size(); ++b) {
                if (b) out << ",";
                out << fmt_number(t.initial_offsets_rad[b] * 180.0 / kPi);
            }
            out << "\n";
        }
    }

    out << "\n[scene]\n";
    out << "snr_db = " << fmt_number(config.scene.snr_db) << "\n";
    out << "blade_body_ratio_db = " << fmt_number(config.scene.blade_body_ratio_db)
        << "\n";
    out << "seed = " << config.scene.seed << "\n";

    out << "\n[pipeline]\n";
    out << "mode = " << pipeline_mode_name(config.mode) << "\n";
    if (config.expected_spread_hz) {
        out << "expected_spread_hz = " << fmt_number(*config.expected_spread_hz) << "\n";
    }
    if (config.target_range_m) {
        out << "target_range_m = " << fmt_number(*config.target_range_m) << "\n";
    }
    if (config.target_velocity_mps) {
        out << "target_velocity_mps = " << fmt_number(*config.target_velocity_mps)
            << "\n";
    }
    out << "demodulate = " << (config.demodulate ? "true" : "false") << "\n";
    if (config.stmdse_range_bin) {
        out << "stmdse_range_bin = " << *config.stmdse_range_bin << "\n";
    }

    out << "\n[stft]\n";
    out << "window = " << config.stft.window << "\n";
    out << "overlap = " << fmt_number(config.stft.overlap) << "\n";
    out << "slow_window = " << config.stft.slow_window << "\n";
    out << "pad_factor = " << config.stft.pad_factor << "\n";

    out << "\n[sift]\n";
    out << "stop_threshold = " << fmt_number(config.sift.stop_threshold) << "\n";
    out << "max_imfs = " << config.sift.max_imfs << "\n";
    out << "directions = " << config.sift.num_directions << "\n";
    out << "min_extrema = " << config.sift.min_extrema << "\n";
    out << "max_iterations = " << config.sift.max_sift_iterations << "\n";
    out << "amplitude_floor = " << fmt_number(config.sift.amplitude_floor) << "\n";

    if (config.capture_path) {
        out << "\n[capture]\n";
        out << "path = " << *config.capture_path << "\n";
        out << "chirps = " << config.capture_layout.chirps << "\n";
        out << "samples_per_chirp = " << config.capture_layout.samples_per_chirp << "\n";
        out << "iq_order = " << (config.capture_layout.q_first ? "qi" : "iq") << "\n";
        out << "int_width = " << config.capture_layout.int_width << "\n";
        out << "endianness = " << (config.capture_layout.little_endian ? "little" : "big")
            << "\n";
    }

    out << "\n[output]\n";
    out << "dir = " << config.output_dir << "\n";

    out << "\n[derived]\n";
    out << "samples_per_chirp = " << derived.samples_per_chirp << "\n";
    out << "idle_samples = " << derived.idle_samples << "\n";
    out << "f_crf_hz = " << fmt_number(derived.f_crf_hz) << "\n";
    out << "bandwidth_hz = " << fmt_number(derived.bandwidth_hz) << "\n";
    out << "wavelength_m = " << fmt_number(derived.wavelength_m) << "\n";
    out << "range_bin_size_m = " << fmt_number(derived.range_bin_size_m) << "\n";
    if (derived.delta_f_md_hz) {
        out << "delta_f_md_hz = " << fmt_number(*derived.delta_f_md_hz) << "\n";
    }
    if (derived.expected_spread_hz) {
        out << "expected_spread_hz = " << fmt_number(*derived.expected_spread_hz) << "\n";
    }
    if (derived.peak_range_hz) {
        out << "peak_range_hz = " << fmt_number(*derived.peak_range_hz) << "\n";
    }
    if (derived.peak_doppler_hz) {
        out << "peak_doppler_hz = " << fmt_number(*derived.peak_doppler_hz) << "\n";
    }
    if (derived.slow_time_aliased) {
        out << "slow_time_aliased = " << (*derived.slow_time_aliased ? "true" : "false")
            << "\n";
    }

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw ConfigError("manifest not writable: " + path.string());
        f << out.str();
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace mdkit

#include "mdkit/types.hpp"

#include <string>

#include "mdkit/errors.hpp"

namespace mdkit {

namespace {
void require(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}
}  // namespace

void RadarParams::validate() const {
    require(chirp_duration_s > 0.0, "radar.chirp_duration_s must be > 0");
    require(chirp_repetition_interval_s >= chirp_duration_s,
            "radar.chirp_repetition_interval_s must be >= radar.chirp_duration_s");
    require(sample_rate_hz > 0.0, "radar.sample_rate_hz must be > 0");
    require(chirp_rate_hz_per_s > 0.0, "radar.chirp_rate_hz_per_s must be > 0");
    require(start_frequency_hz > 0.0, "radar.start_frequency_hz must be > 0");
    require(num_chirps >= 1, "radar.num_chirps must be >= 1");
    require(propagation_speed > 0.0, "radar.propagation_speed must be > 0");
    require(samples_per_chirp() >= 1,
            "radar.chirp_duration_s * radar.sample_rate_hz rounds to zero samples");
}

void RotorTarget::default_offsets() {
    initial_offsets_rad.resize(num_blades);
    for (std::size_t b = 0; b < num_blades; ++b) {
        initial_offsets_rad[b] = 2.0 * kPi * static_cast<double>(b) /
                                 static_cast<double>(num_blades ? num_blades : 1);
    }
}

void RotorTarget::validate() const {
    require(range_m > 0.0, "target.range_m must be > 0");
    require(blade_length_m >= 0.0, "target.blade_length_m must be >= 0");
    require(rotation_rate_rad_s >= 0.0, "target.rotation_rate must be >= 0");
    require(initial_offsets_rad.size() == num_blades,
            "target.blade_offsets must have exactly num_blades entries");
}

}  // namespace mdkit

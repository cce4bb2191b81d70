#pragma once

#include <stdexcept>
#include <string>

namespace mdkit {

// Bad or contradictory configuration input. CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed raw capture file. CLI exit code 3.
struct CaptureError : std::runtime_error {
    explicit CaptureError(const std::string& msg) : std::runtime_error(msg) {}
};

// No IMF passed the selection criteria; the scene holds no usable
// micro-Doppler signature. CLI exit code 4.
struct NoSignatureError : std::runtime_error {
    explicit NoSignatureError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mdkit

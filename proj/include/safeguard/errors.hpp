#pragma once

#include <stdexcept>
#include <string>

namespace safeguard {

// Query point coincides with the ellipse center; the SDF gradient is
// undefined there and callers must substitute their own fallback.
struct AtCenter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The infinite line of a segment crosses the ellipse, so no tangency
// solution exists.
struct LineIntersectsEllipse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Robot and obstacle interiors overlap.
struct Penetration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateCoefficients : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPositiveDefiniteQ : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scenario file problem; `pointer` is a JSON pointer to the offending key.
struct ConfigError : std::runtime_error {
    std::string pointer;
    ConfigError(const std::string& ptr, const std::string& what)
        : std::runtime_error(what + " (at " + ptr + ")"), pointer(ptr) {}
};

}  // namespace safeguard

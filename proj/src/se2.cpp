#include "safeguard/se2.hpp"

#include <cmath>

namespace safeguard {

double normalize_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod of a tiny negative can round up to 2*pi
    return r;
}

double wrap_angle(double delta) {
    double r = std::fmod(delta + kPi, kTwoPi);
    if (r <= 0.0) r += kTwoPi;
    return r - kPi;
}

Rot2 rotation_matrix(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, -s, s, c};
}

Mat2 rotation_derivative(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {-s, -c, c, -s};
}

Vec2 to_frame(const SE2Pose& pose, const Vec2& world_point) {
    return pose.rotation().tmul(world_point - pose.q);
}

Vec2 from_frame(const SE2Pose& pose, const Vec2& body_point) {
    return pose.q + pose.rotation() * body_point;
}

}  // namespace safeguard

#pragma once

#include "safeguard/vec2.hpp"

namespace safeguard {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Rotation matrices are plain Mat2 values; anything returned by
// rotation_matrix() is orthonormal with determinant +1.
using Rot2 = Mat2;

// Normalize an angle into [0, 2*pi).
double normalize_angle(double theta);

// Wrap an angle difference into (-pi, pi].
double wrap_angle(double delta);

// Counter-clockwise rotation by theta: [[cos, -sin], [sin, cos]].
Rot2 rotation_matrix(double theta);

// d/dtheta of rotation_matrix: [[-sin, -cos], [cos, -sin]].
Mat2 rotation_derivative(double theta);

// Planar rigid-body pose. theta is normalized to [0, 2*pi) on construction.
struct SE2Pose {
    Vec2 q;
    double theta = 0.0;

    SE2Pose() = default;
    SE2Pose(Vec2 position, double angle) : q(position), theta(normalize_angle(angle)) {}

    Rot2 rotation() const { return rotation_matrix(theta); }
};

// World point expressed in the body frame of `pose`: R^T (p - q).
Vec2 to_frame(const SE2Pose& pose, const Vec2& world_point);

// Body point expressed in the world frame: q + R p'.
Vec2 from_frame(const SE2Pose& pose, const Vec2& body_point);

}  // namespace safeguard

#pragma once

#include <cstddef>
#include <limits>

#include "safeguard/ellipse.hpp"
#include "safeguard/polygon.hpp"
#include "safeguard/se2.hpp"

namespace safeguard {

// Distance between an ellipse (obstacle) and a convex polygon (robot), both
// posed in the world frame, plus every partial derivative the barrier
// condition needs. Witness points are reported in the obstacle body frame.
struct DistanceResult {
    double value = 0.0;          // separation distance; negative surrogate when overlapping
    Vec2 robot_witness;          // closest polygon point, obstacle frame
    Vec2 ellipse_witness;        // closest ellipse point, obstacle frame
    Vec2 grad_q;                 // d(value)/d(obstacle position), world frame
    double grad_theta_obs = 0.0; // d(value)/d(obstacle angle)
    Vec2 grad_qtilde;            // d(value)/d(robot position), world frame
    double grad_thetatilde = 0.0;// d(value)/d(robot angle)
    std::size_t argmin_edge = 0;
    double argmin_tau = 0.0;     // in [0, 1] on the argmin edge
    double margin = std::numeric_limits<double>::infinity();  // best vs second-best edge
    bool penetrating = false;
};

struct SegmentDistanceResult {
    double distance = 0.0;
    double tau = 0.0;      // in [0, 1]
    Vec2 seg_point;        // closest point on the segment
    Vec2 ellipse_point;    // closest point on the ellipse boundary
};

// Distance between a segment and the ellipse, both in the ellipse body frame.
// Interior tangency when the line solution lands strictly inside (0, 1),
// otherwise the nearer endpoint. Throws Penetration when the segment meets
// the ellipse.
SegmentDistanceResult segment_distance(const EllipseShape& e, const Vec2& p0, const Vec2& p1);

// Separation between the posed ellipse and the posed polygon with all four
// pose partials. Overlapping bodies yield the negative surrogate described
// in penetration_surrogate() and penetrating = true.
DistanceResult polygon_ellipse_distance(const EllipseShape& e, const SE2Pose& obstacle_pose,
                                        const ConvexPolygon& poly, const SE2Pose& robot_pose);

// Derivatives of the distance w.r.t. the full rotation matrices. Consistent
// with the angle partials through  tr[dd_dR * dR/dtheta]  and
// tr[dd_dRtilde * (dRtilde/dthetatilde)^T].
struct MatrixPartials {
    Mat2 dd_dR;
    Mat2 dd_dRtilde;
};
MatrixPartials matrix_partials(const DistanceResult& result, const SE2Pose& obstacle_pose,
                               const SE2Pose& robot_pose);

// Distance from a disc robot (center, radius) to the posed ellipse; the
// signed point SDF minus the radius, so it degrades continuously under
// penetration. grad_qtilde is the derivative w.r.t. the disc center.
struct CircleDistanceResult {
    double value = 0.0;
    Vec2 grad_q;
    double grad_theta_obs = 0.0;
    Vec2 grad_qtilde;
};
CircleDistanceResult circle_ellipse_distance(const EllipseShape& e, const SE2Pose& obstacle_pose,
                                             const Vec2& center, double radius);

}  // namespace safeguard

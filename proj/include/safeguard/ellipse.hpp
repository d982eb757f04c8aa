#pragma once

#include <optional>

#include "safeguard/vec2.hpp"

namespace safeguard {

// Tolerances used by the ellipse routines; overridable per call site.
struct EllipseTolerances {
    double center_radius = 1e-12;        // query counts as "at center" below this
    double circle_rel = 1e-9;            // |b^2-a^2| below this (rel.) is a circle
    double degenerate_segment = 1e-12;   // minimum direction norm for lines
    double boundary = 1e-12;             // |distance| below this is "on boundary"
};

inline constexpr EllipseTolerances kDefaultEllipseTol{};

// Axis-aligned ellipse in its own body frame: semi-axis a along x, b along y.
struct EllipseShape {
    double a = 1.0;
    double b = 1.0;

    EllipseShape() = default;
    EllipseShape(double a_, double b_);

    // < 1 inside, 1 on boundary, > 1 outside
    double level(const Vec2& p) const {
        const double u = p.x / a, v = p.y / b;
        return u * u + v * v;
    }
    bool contains(const Vec2& p) const { return level(p) < 1.0; }

    // support function value in direction n: || diag(a,b) n ||
    double support(const Vec2& n) const { return std::hypot(a * n.x, b * n.y); }
};

struct ClosestPointResult {
    Vec2 point_on_ellipse;  // body frame, exactly on the boundary
    double distance = 0.0;  // signed: positive outside, negative inside
    Vec2 gradient;          // unit SDF gradient (outward normal on the boundary)
};

// Global closest boundary point to p, solved through the closest-point
// quartic with quadrant reduction. Throws AtCenter when ||p|| is below
// tol.center_radius.
ClosestPointResult closest_point_to_point(const EllipseShape& e, const Vec2& p,
                                          const EllipseTolerances& tol = kDefaultEllipseTol);

// Signed distance of p to the ellipse boundary.
double sdf(const EllipseShape& e, const Vec2& p,
           const EllipseTolerances& tol = kDefaultEllipseTol);

struct LineTangencyResult {
    Vec2 ellipse_point;  // boundary point whose tangent is parallel to the line
    Vec2 line_point;     // orthogonal projection of ellipse_point onto the line
    double tau = 0.0;    // line parameter of line_point w.r.t. (p0, p1); not clamped
};

// Closest pair between the ellipse and the infinite line through p0, p1.
// Throws LineIntersectsEllipse when the line crosses the ellipse and
// std::invalid_argument when ||p1-p0|| is degenerate.
LineTangencyResult closest_point_to_line(const EllipseShape& e, const Vec2& p0, const Vec2& p1,
                                         const EllipseTolerances& tol = kDefaultEllipseTol);

// Non-throwing core of closest_point_to_line; empty when the line crosses.
std::optional<LineTangencyResult> try_closest_point_to_line(
    const EllipseShape& e, const Vec2& p0, const Vec2& p1,
    const EllipseTolerances& tol = kDefaultEllipseTol);

// Whether the closed segment [p0, p1] meets the closed ellipse.
bool segment_intersects_ellipse(const EllipseShape& e, const Vec2& p0, const Vec2& p1);

}  // namespace safeguard

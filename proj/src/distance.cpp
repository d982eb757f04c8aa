#include "safeguard/distance.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "safeguard/errors.hpp"

namespace safeguard {
namespace {

// SDF evaluation that tolerates the exact center (where the gradient is
// undefined): substitute the center value -min(a,b) and the direction of the
// nearest boundary, which is all the penetration surrogate needs.
ClosestPointResult sdf_with_center_fallback(const EllipseShape& e, const Vec2& p) {
    try {
        return closest_point_to_point(e, p);
    } catch (const AtCenter&) {
        ClosestPointResult r;
        if (e.a <= e.b) {
            r.point_on_ellipse = {e.a, 0.0};
            r.gradient = {1.0, 0.0};
            r.distance = -e.a;
        } else {
            r.point_on_ellipse = {0.0, e.b};
            r.gradient = {0.0, 1.0};
            r.distance = -e.b;
        }
        return r;
    }
}

Vec2 closest_point_on_segment(const Vec2& p0, const Vec2& p1, const Vec2& q, double* tau_out) {
    const Vec2 d = p1 - p0;
    const double dd = d.squared_norm();
    double t = dd > 0.0 ? dot(q - p0, d) / dd : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (tau_out) *tau_out = t;
    return p0 + d * t;
}

struct SurrogateWitness {
    double value = 0.0;
    Vec2 robot_point;      // obstacle frame
    Vec2 ellipse_point;    // obstacle frame
    Vec2 grad_psi;         // ascent direction of the surrogate, obstacle frame
    std::size_t edge = 0;
    double tau = 0.0;
};

// Deepest SDF value along a segment that crosses the ellipse, by grid
// refinement. Only runs on overlap recovery, so cost is irrelevant.
SurrogateWitness deepest_on_segment(const EllipseShape& e, const Vec2& p0, const Vec2& p1) {
    double lo = 0.0, hi = 1.0;
    double best_tau = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int round = 0; round < 4; ++round) {
        const int n = round == 0 ? 64 : 32;
        int best_i = 0;
        for (int i = 0; i <= n; ++i) {
            const double t = lo + (hi - lo) * i / n;
            const Vec2 p = p0 + (p1 - p0) * t;
            const double v = sdf_with_center_fallback(e, p).distance;
            if (v < best) {
                best = v;
                best_tau = t;
                best_i = i;
            }
        }
        const double cell = (hi - lo) / n;
        lo = std::max(0.0, lo + (best_i - 1) * cell);
        hi = std::min(1.0, lo + 2.0 * cell);
    }
    SurrogateWitness w;
    const Vec2 p = p0 + (p1 - p0) * best_tau;
    const auto cp = sdf_with_center_fallback(e, p);
    w.value = cp.distance;
    w.robot_point = p;
    w.ellipse_point = cp.point_on_ellipse;
    w.grad_psi = cp.gradient;
    w.tau = best_tau;
    return w;
}

}  // namespace

SegmentDistanceResult segment_distance(const EllipseShape& e, const Vec2& p0, const Vec2& p1) {
    if (segment_intersects_ellipse(e, p0, p1)) {
        throw Penetration("segment crosses the ellipse");
    }

    if (auto line = try_closest_point_to_line(e, p0, p1)) {
        if (line->tau > 0.0 && line->tau < 1.0) {
            SegmentDistanceResult r;
            r.distance = (line->line_point - line->ellipse_point).norm();
            r.tau = line->tau;
            r.seg_point = line->line_point;
            r.ellipse_point = line->ellipse_point;
            return r;
        }
    }

    const auto c0 = closest_point_to_point(e, p0);
    const auto c1 = closest_point_to_point(e, p1);
    SegmentDistanceResult r;
    if (c0.distance <= c1.distance) {
        r = {c0.distance, 0.0, p0, c0.point_on_ellipse};
    } else {
        r = {c1.distance, 1.0, p1, c1.point_on_ellipse};
    }
    return r;
}

namespace {

// Fill the four pose partials from the witness pair. grad_psi and
// robot_witness are in the obstacle frame.
void fill_partials(DistanceResult& res, const SE2Pose& obstacle_pose, const SE2Pose& robot_pose) {
    const Rot2 R = obstacle_pose.rotation();
    const Vec2 world_witness = from_frame(obstacle_pose, res.robot_witness);
    const Vec2 p_tilde = to_frame(robot_pose, world_witness);
    const Vec2 v = world_witness - obstacle_pose.q;  // = Rtilde p_tilde + (q_tilde - q)

    const Vec2 grad_psi = R.tmul(res.grad_qtilde);  // recover body-frame gradient
    res.grad_q = -(R * grad_psi);
    res.grad_theta_obs = dot(grad_psi, rotation_derivative(obstacle_pose.theta).tmul(v));
    res.grad_thetatilde =
        dot(grad_psi, R.tmul(rotation_derivative(robot_pose.theta) * p_tilde));
}

}  // namespace

DistanceResult polygon_ellipse_distance(const EllipseShape& e, const SE2Pose& obstacle_pose,
                                        const ConvexPolygon& poly, const SE2Pose& robot_pose) {
    const std::size_t m = poly.vertex_count();
    std::vector<Vec2> pv(m);
    for (std::size_t i = 0; i < m; ++i) {
        pv[i] = to_frame(obstacle_pose, from_frame(robot_pose, poly.vertices()[i]));
    }

    const Rot2 R = obstacle_pose.rotation();
    DistanceResult res;

    bool any_vertex_inside = false;
    for (const Vec2& p : pv) any_vertex_inside |= e.contains(p);
    const bool center_in_poly = point_in_convex_polygon(pv, Vec2{0.0, 0.0});
    bool any_edge_crossing = false;
    for (std::size_t i = 0; i < poly.edge_count() && !any_edge_crossing; ++i) {
        any_edge_crossing =
            segment_intersects_ellipse(e, pv[i], pv[(i + 1) % m]);
    }

    if (any_vertex_inside || center_in_poly || any_edge_crossing) {
        res.penetrating = true;
        SurrogateWitness w;
        if (any_vertex_inside) {
            // deepest vertex
            w.value = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m; ++i) {
                const auto cp = sdf_with_center_fallback(e, pv[i]);
                if (cp.distance < w.value) {
                    w = {cp.distance, pv[i], cp.point_on_ellipse, cp.gradient, i, 0.0};
                }
            }
        } else if (center_in_poly) {
            // negated distance from the ellipse center to the polygon boundary
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < poly.edge_count(); ++i) {
                double tau = 0.0;
                const Vec2 cp = closest_point_on_segment(pv[i], pv[(i + 1) % m], {0.0, 0.0}, &tau);
                const double d = cp.norm();
                if (d < best) {
                    best = d;
                    w.robot_point = cp;
                    w.edge = i;
                    w.tau = tau;
                }
            }
            w.value = -best;
            const double lvl = std::sqrt(e.level(w.robot_point));
            w.ellipse_point = lvl > 0.0 ? w.robot_point / lvl : Vec2{e.a, 0.0};
            w.grad_psi = best > 0.0 ? w.robot_point / -best : Vec2{-1.0, 0.0};
        } else {
            // edge chord cuts the ellipse with all vertices outside
            w.value = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < poly.edge_count(); ++i) {
                const Vec2 a = pv[i], b = pv[(i + 1) % m];
                if (!segment_intersects_ellipse(e, a, b)) continue;
                SurrogateWitness cand = deepest_on_segment(e, a, b);
                if (cand.value < w.value) {
                    cand.edge = i;
                    w = cand;
                }
            }
        }
        res.value = w.value;
        res.robot_witness = w.robot_point;
        res.ellipse_witness = w.ellipse_point;
        res.argmin_edge = w.edge;
        res.argmin_tau = w.tau;
        res.margin = 0.0;
        res.grad_qtilde = R * w.grad_psi;
        fill_partials(res, obstacle_pose, robot_pose);
        return res;
    }

    double second = std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    SegmentDistanceResult best_seg;
    std::size_t best_edge = 0;
    for (std::size_t i = 0; i < poly.edge_count(); ++i) {
        const auto seg = segment_distance(e, pv[i], pv[(i + 1) % m]);
        if (seg.distance < best) {
            second = best;
            best = seg.distance;
            best_seg = seg;
            best_edge = i;
        } else if (seg.distance < second) {
            second = seg.distance;
        }
    }

    res.value = best;
    res.robot_witness = best_seg.seg_point;
    res.ellipse_witness = best_seg.ellipse_point;
    res.argmin_edge = best_edge;
    res.argmin_tau = best_seg.tau;
    res.margin = second - best;

    const Vec2 delta = best_seg.seg_point - best_seg.ellipse_point;
    Vec2 grad_psi;
    if (best > 1e-12) {
        grad_psi = delta / best;
    } else {
        // touching: use the ellipse outward normal at the witness
        Vec2 nrm{best_seg.ellipse_point.x / (e.a * e.a), best_seg.ellipse_point.y / (e.b * e.b)};
        grad_psi = nrm / nrm.norm();
    }
    res.grad_qtilde = R * grad_psi;
    fill_partials(res, obstacle_pose, robot_pose);
    return res;
}

MatrixPartials matrix_partials(const DistanceResult& result, const SE2Pose& obstacle_pose,
                               const SE2Pose& robot_pose) {
    const Rot2 R = obstacle_pose.rotation();
    const Vec2 grad_psi = R.tmul(result.grad_qtilde);
    const Vec2 world_witness = from_frame(obstacle_pose, result.robot_witness);
    const Vec2 p_tilde = to_frame(robot_pose, world_witness);
    const Vec2 v = world_witness - obstacle_pose.q;

    MatrixPartials out;
    out.dd_dR = outer(grad_psi, v);
    out.dd_dRtilde = R * outer(grad_psi, p_tilde);
    return out;
}

CircleDistanceResult circle_ellipse_distance(const EllipseShape& e, const SE2Pose& obstacle_pose,
                                             const Vec2& center, double radius) {
    const Rot2 R = obstacle_pose.rotation();
    const Vec2 p = to_frame(obstacle_pose, center);
    const auto cp = sdf_with_center_fallback(e, p);

    CircleDistanceResult res;
    res.value = cp.distance - radius;
    res.grad_qtilde = R * cp.gradient;
    res.grad_q = -res.grad_qtilde;
    res.grad_theta_obs =
        dot(cp.gradient, rotation_derivative(obstacle_pose.theta).tmul(center - obstacle_pose.q));
    return res;
}

}  // namespace safeguard

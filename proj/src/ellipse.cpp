#include "safeguard/ellipse.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "safeguard/errors.hpp"
#include "safeguard/quartic.hpp"

namespace safeguard {

EllipseShape::EllipseShape(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("ellipse semi-axes must be positive and finite");
    }
}

namespace {

struct Candidate {
    Vec2 point;
    double d2;
};

void consider(std::vector<Candidate>& cands, const Vec2& q, const Vec2& pt) {
    cands.push_back({pt, (q - pt).squared_norm()});
}

// Closest boundary point for a first-quadrant query q (qx, qy >= 0), a != b.
Vec2 closest_first_quadrant(const EllipseShape& e, const Vec2& q) {
    const double a = e.a, b = e.b;
    const double denom = b * b - a * a;

    std::vector<Candidate> cands;
    cands.reserve(12);

    // axis vertices are always valid fallbacks
    consider(cands, q, {a, 0.0});
    consider(cands, q, {-a, 0.0});
    consider(cands, q, {0.0, b});
    consider(cands, q, {0.0, -b});

    // On-axis queries make the quartic degenerate; their stationary points
    // are available in closed form, and keeping them as candidates also
    // covers nearly-on-axis queries where the quartic roots turn fragile.
    {
        const double lam = a * q.x / (a * a - b * b);  // cos t with sin t = 0 branch removed
        if (lam >= -1.0 && lam <= 1.0) {
            consider(cands, q, {a * lam, b * std::sqrt(std::max(0.0, 1.0 - lam * lam))});
        }
        const double sig = b * q.y / denom;  // sin t on the x = 0 branch
        if (sig >= -1.0 && sig <= 1.0) {
            consider(cands, q, {a * std::sqrt(std::max(0.0, 1.0 - sig * sig)), b * sig});
        }
    }

    // general stationarity quartic in lambda = cos t
    const double m = q.x * a / denom;
    const double n = q.y * b / denom;
    MonicQuartic quartic{2.0 * m, m * m + n * n - 1.0, -2.0 * m, -m * m};
    for (double lam : solve_monic_quartic(quartic)) {
        if (lam < -1.0) lam = -1.0;
        if (lam > 1.0) lam = 1.0;
        const double s = std::sqrt(std::max(0.0, 1.0 - lam * lam));
        consider(cands, q, {a * lam, b * s});
    }

    const auto best = std::min_element(cands.begin(), cands.end(),
                                       [](const Candidate& l, const Candidate& r) {
                                           return l.d2 < r.d2;
                                       });
    return best->point;
}

}  // namespace

ClosestPointResult closest_point_to_point(const EllipseShape& e, const Vec2& p,
                                          const EllipseTolerances& tol) {
    if (p.norm() < tol.center_radius) {
        throw AtCenter("SDF gradient is undefined at the ellipse center");
    }

    Vec2 foot;
    const double a2 = e.a * e.a, b2 = e.b * e.b;
    if (std::abs(b2 - a2) < tol.circle_rel * std::max(a2, b2)) {
        foot = p * (e.a / p.norm());
    } else {
        const double sx = p.x < 0.0 ? -1.0 : 1.0;
        const double sy = p.y < 0.0 ? -1.0 : 1.0;
        const Vec2 q{sx * p.x, sy * p.y};
        const Vec2 fq = closest_first_quadrant(e, q);
        foot = {sx * fq.x, sy * fq.y};
    }

    ClosestPointResult res;
    res.point_on_ellipse = foot;
    const Vec2 delta = p - foot;
    const double d = delta.norm();
    const bool inside = e.level(p) < 1.0;
    res.distance = inside ? -d : d;
    if (d > tol.boundary) {
        res.gradient = inside ? delta / -d : delta / d;
    } else {
        // on the boundary: use the outward normal
        Vec2 nrm{foot.x / a2, foot.y / b2};
        res.gradient = nrm / nrm.norm();
    }
    return res;
}

double sdf(const EllipseShape& e, const Vec2& p, const EllipseTolerances& tol) {
    return closest_point_to_point(e, p, tol).distance;
}

std::optional<LineTangencyResult> try_closest_point_to_line(const EllipseShape& e, const Vec2& p0,
                                                            const Vec2& p1,
                                                            const EllipseTolerances& tol) {
    const Vec2 d = p1 - p0;
    const double len = d.norm();
    if (len <= tol.degenerate_segment) {
        throw std::invalid_argument("degenerate segment direction");
    }
    const Vec2 nhat{-d.y / len, d.x / len};
    const double C = -dot(nhat, p0);
    if (C == 0.0) return std::nullopt;  // line through the center always crosses

    // tangency point is +-(diag(a,b)^2 n)/||diag(a,b) n||, sign opposite to C
    const double w = e.support(nhat);
    const double sign = C > 0.0 ? -1.0 : 1.0;
    const Vec2 ellipse_point = Vec2{e.a * e.a * nhat.x, e.b * e.b * nhat.y} * (sign / w);

    const double tau = dot(d, ellipse_point - p0) / (len * len);
    const Vec2 line_point = p0 + d * tau;

    // n_signed points from the ellipse toward the line; a non-positive gap
    // means the line cuts the ellipse
    const Vec2 n_signed = nhat * sign;
    if (dot(line_point - ellipse_point, n_signed) <= 0.0) return std::nullopt;

    return LineTangencyResult{ellipse_point, line_point, tau};
}

LineTangencyResult closest_point_to_line(const EllipseShape& e, const Vec2& p0, const Vec2& p1,
                                         const EllipseTolerances& tol) {
    auto res = try_closest_point_to_line(e, p0, p1, tol);
    if (!res) throw LineIntersectsEllipse("infinite line crosses the ellipse");
    return *res;
}

bool segment_intersects_ellipse(const EllipseShape& e, const Vec2& p0, const Vec2& p1) {
    // scale to the unit circle and take the closest segment point to origin
    const Vec2 q0{p0.x / e.a, p0.y / e.b};
    const Vec2 q1{p1.x / e.a, p1.y / e.b};
    const Vec2 d = q1 - q0;
    const double dd = d.squared_norm();
    double t = dd > 0.0 ? -dot(q0, d) / dd : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (q0 + d * t).squared_norm() <= 1.0;
}

}  // namespace safeguard

#include "safeguard/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace safeguard {

ConvexPolygon::ConvexPolygon(std::vector<Vec2> body_vertices) : verts_(std::move(body_vertices)) {
    const std::size_t m = verts_.size();
    if (m < 2) throw std::invalid_argument("polygon needs at least 2 vertices");
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 d = verts_[(i + 1) % m] - verts_[i];
        if (m == 2 && i == 1) break;
        if (d.norm() <= 1e-9) throw std::invalid_argument("consecutive vertices coincide");
    }
    if (m >= 3) {
        for (std::size_t i = 0; i < m; ++i) {
            const Vec2 a = verts_[(i + 1) % m] - verts_[i];
            const Vec2 b = verts_[(i + 2) % m] - verts_[(i + 1) % m];
            if (cross(a, b) <= 0.0) {
                throw std::invalid_argument(
                    "vertices must form a strictly convex counter-clockwise polygon");
            }
        }
    }
}

double ConvexPolygon::enclosing_radius() const {
    double r = 0.0;
    for (const Vec2& v : verts_) r = std::max(r, v.norm());
    return r;
}

bool point_in_convex_polygon(const std::vector<Vec2>& ccw, const Vec2& p) {
    const std::size_t m = ccw.size();
    if (m < 3) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 edge = ccw[(i + 1) % m] - ccw[i];
        if (cross(edge, p - ccw[i]) < 0.0) return false;
    }
    return true;
}

}  // namespace safeguard

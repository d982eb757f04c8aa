#pragma once

#include <cstddef>
#include <vector>

#include "safeguard/vec2.hpp"

namespace safeguard {

// Robot body shape: vertices in the body frame, counter-clockwise. M = 2 is a
// bare line segment (used for arm links).
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Vec2> body_vertices);

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }

    // number of distinct boundary edges: M for M >= 3, one for a segment
    std::size_t edge_count() const { return verts_.size() == 2 ? 1 : verts_.size(); }
    Vec2 edge_start(std::size_t i) const { return verts_[i]; }
    Vec2 edge_end(std::size_t i) const { return verts_[(i + 1) % verts_.size()]; }

    // radius of the smallest origin-centered disc containing the shape
    double enclosing_radius() const;

private:
    std::vector<Vec2> verts_;
};

// True when p lies in the closed convex hull of CCW-ordered vertices.
bool point_in_convex_polygon(const std::vector<Vec2>& ccw_vertices, const Vec2& p);

}  // namespace safeguard

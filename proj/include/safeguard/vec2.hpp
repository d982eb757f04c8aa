#pragma once

#include <cmath>

namespace safeguard {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double norm() const { return std::hypot(x, y); }
    constexpr double squared_norm() const { return x * x + y * y; }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// z-component of the 3-D cross product of planar vectors
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// 2x2 matrix, row-major
struct Mat2 {
    double m00 = 1.0, m01 = 0.0;
    double m10 = 0.0, m11 = 1.0;

    constexpr Mat2() = default;
    constexpr Mat2(double a, double b, double c, double d) : m00(a), m01(b), m10(c), m11(d) {}

    constexpr Vec2 operator*(const Vec2& v) const {
        return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
    }
    constexpr Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    constexpr Mat2 operator+(const Mat2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    constexpr Mat2 operator*(double s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

    constexpr Mat2 transposed() const { return {m00, m10, m01, m11}; }
    constexpr double trace() const { return m00 + m11; }
    constexpr double det() const { return m00 * m11 - m01 * m10; }

    // v applied to the transpose, i.e. M^T v, without forming the transpose
    constexpr Vec2 tmul(const Vec2& v) const {
        return {m00 * v.x + m10 * v.y, m01 * v.x + m11 * v.y};
    }
};

// outer product a b^T
constexpr Mat2 outer(const Vec2& a, const Vec2& b) {
    return {a.x * b.x, a.x * b.y, a.y * b.x, a.y * b.y};
}

}  // namespace safeguard

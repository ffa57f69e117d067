#ifndef FBDISK_GEOMETRY_HPP
#define FBDISK_GEOMETRY_HPP

#include <cmath>

namespace fbdisk {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
/// 90-degree counterclockwise rotation.
inline Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }
/// Mirror across the line {x = y}.
inline Vec2 swap_xy(Vec2 v) { return {v.y, v.x}; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline Vec3 operator*(double s, Vec3 v) { return v * s; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }
inline Vec3 normalized(Vec3 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}
/// Mirror across the vertical plane {x = y}.
inline Vec3 swap_xy(Vec3 v) { return {v.y, v.x, v.z}; }
/// Mirror across the horizontal plane {z = 0}.
inline Vec3 flip_z(Vec3 v) { return {v.x, v.y, -v.z}; }

/// i-th of n uniform grid points on [lo, hi] with both ends hit exactly.
inline double grid_point(double lo, double hi, int i, int n) {
    if (i == 0) return lo;
    if (i == n - 1) return hi;
    return lo + (hi - lo) * i / (n - 1);
}

} // namespace fbdisk

#endif

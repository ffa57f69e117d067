#ifndef FBDISK_CIRCLE_PENCIL_HPP
#define FBDISK_CIRCLE_PENCIL_HPP

#include "fbdisk/geometry.hpp"

namespace fbdisk::circle_pencil {

// Circles through a point p of the horizontal unit disk, contained in the
// vertical plane through p and the origin, meeting both the horizontal disk
// and the unit sphere at right angles. The member through p = 0 degenerates
// to the vertical segment {0}x{0}x[-1,1].

/// Circle radius as a function of |p|; +infinity at |p| = 0.
double radius(double p_norm);

/// Arc-length half-extent v_p of the in-ball portion: |v| <= v_p stays in the
/// closed ball and v = +-v_p lands on the sphere. half_extent(0) = 1 (segment),
/// half_extent(1) = 0 (the circle degenerates to a boundary point).
double half_extent(double p_norm);

/// Arc-length point c_p(v), with c_p(0) = p and c_p'(0) = (0,0,1).
/// Throws std::domain_error when |v| exceeds the in-ball extent.
Vec3 eval_circle(Vec2 p, double v);

/// Unit tangent c_p'(v).
Vec3 eval_circle_d1(Vec2 p, double v);

struct OrthoCircle {
    Vec2 p;
    double radius = 0.0;        // +inf for the vertical segment
    double half_extent = 0.0;
    Vec2 axis_dir;              // p/|p|; meaningless when !axis_defined
    bool axis_defined = false;  // false only for p = 0
};

OrthoCircle make_circle(Vec2 p);

// Even scalar kernels of xi = (v/R)^2 used by the stable evaluation of the
// circle formulas (and of the circle-foliated immersion built on them):
//   H(xi)  = 2(1 - cos r)/r^2,  Sc(xi) = sin(r)/r,  r = sqrt(xi).
// With w = |p|^2 and xi = 4 w v^2 / (1-w)^2, the circle point is
//   ( p * Phi, v * Sc )  with  Phi = 1 + v^2 H(xi)/(1-w),
// which is smooth in p across p = 0 and needs no division by |p|.
struct TrigKernels {
    double H, Hp, Hpp;    // H and d/dxi, d2/dxi2
    double Sc, Scp, Scpp;
};

TrigKernels trig_kernels(double xi);

} // namespace fbdisk::circle_pencil

#endif

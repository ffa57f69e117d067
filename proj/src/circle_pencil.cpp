#include "fbdisk/circle_pencil.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fbdisk::circle_pencil {

namespace {
constexpr double kSeriesSwitchXi = 0.04;      // |r| < 0.2
constexpr double kHalfExtentSeriesP = 1e-4;   // small-|p| branch of v_p
}

double radius(double p_norm) {
    if (p_norm < 0.0 || p_norm > 1.0) throw std::domain_error("radius: p_norm outside [0,1]");
    if (p_norm == 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 * (1.0 / p_norm - p_norm);
}

double half_extent(double p_norm) {
    if (p_norm < 0.0 || p_norm > 1.0) throw std::domain_error("half_extent: p_norm outside [0,1]");
    if (p_norm == 1.0) return 0.0;
    const double w = p_norm * p_norm;
    if (p_norm < kHalfExtentSeriesP) {
        // v_p -> 1 as |p| -> 0; series in eps = 1 - R/(R+|p|) = 2w/(1+w)
        const double eps = 2.0 * w / (1.0 + w);
        const double lead = (1.0 - w) / std::sqrt(1.0 + w);  // R sqrt(2 eps)
        return lead * (1.0 + eps / 12.0 + 3.0 * eps * eps / 160.0 + 5.0 * eps * eps * eps / 896.0);
    }
    // v_p = R arccos(R/(R+|p|)); the half-angle form 2 asin(|p|/sqrt(1+w))
    // stays well conditioned where arccos of a near-unit argument is not.
    const double R = 0.5 * (1.0 / p_norm - p_norm);
    return 2.0 * R * std::asin(p_norm / std::sqrt(1.0 + w));
}

TrigKernels trig_kernels(double xi) {
    TrigKernels k{};
    if (xi < kSeriesSwitchXi) {
        k.H = 1.0 + xi * (-1.0 / 12 + xi * (1.0 / 360 + xi * (-1.0 / 20160 + xi * (1.0 / 1814400))));
        k.Hp = -1.0 / 12 + xi * (1.0 / 180 + xi * (-1.0 / 6720 + xi * (1.0 / 453600)));
        k.Hpp = 1.0 / 180 + xi * (-1.0 / 3360 + xi * (1.0 / 151200));
        k.Sc = 1.0 + xi * (-1.0 / 6 + xi * (1.0 / 120 + xi * (-1.0 / 5040 + xi * (1.0 / 362880))));
        k.Scp = -1.0 / 6 + xi * (1.0 / 60 + xi * (-1.0 / 1680 + xi * (1.0 / 90720)));
        k.Scpp = 1.0 / 60 + xi * (-1.0 / 840 + xi * (1.0 / 30240));
        return k;
    }
    const double r = std::sqrt(xi);
    const double s = std::sin(r), c = std::cos(r);
    const double sh = std::sin(0.5 * r);
    k.H = 4.0 * sh * sh / xi;
    k.Hp = (r * s - 2.0 + 2.0 * c) / (xi * xi);
    k.Hpp = (xi * c - 5.0 * r * s + 8.0 - 8.0 * c) / (2.0 * xi * xi * xi);
    k.Sc = s / r;
    k.Scp = (r * c - s) / (2.0 * xi * r);
    k.Scpp = (-xi * s - 3.0 * r * c + 3.0 * s) / (4.0 * xi * xi * r);
    return k;
}

Vec3 eval_circle(Vec2 p, double v) {
    const double m = norm(p);
    if (m > 1.0) throw std::domain_error("eval_circle: p outside the unit disk");
    const double vp = half_extent(m);
    if (std::abs(v) > vp + 1e-12) throw std::domain_error("eval_circle: |v| exceeds half_extent");
    if (m == 0.0) return {0.0, 0.0, v};
    const double w = m * m;
    const double om = 1.0 - w;
    const double xi = 4.0 * w * v * v / (om * om);
    const TrigKernels k = trig_kernels(xi);
    const double Phi = 1.0 + v * v * k.H / om;
    return {p.x * Phi, p.y * Phi, v * k.Sc};
}

Vec3 eval_circle_d1(Vec2 p, double v) {
    const double m = norm(p);
    if (m == 0.0) return {0.0, 0.0, 1.0};
    const double w = m * m;
    const double om = 1.0 - w;
    const double x = 2.0 * m * v / om;  // v / R
    // c' = p_hat sin(x) + e3 cos(x); sin(x)/m = 2 v Sc(xi) / (1-w).
    const double xi = x * x;
    const double s_over_m = 2.0 * v * trig_kernels(xi).Sc / om;
    return {p.x * s_over_m, p.y * s_over_m, std::cos(x)};
}

OrthoCircle make_circle(Vec2 p) {
    OrthoCircle c;
    c.p = p;
    const double m = norm(p);
    c.radius = radius(m);
    c.half_extent = half_extent(m);
    c.axis_defined = m > 0.0;
    c.axis_dir = c.axis_defined ? Vec2{p.x / m, p.y / m} : Vec2{};
    return c;
}

} // namespace fbdisk::circle_pencil

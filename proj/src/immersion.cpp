#include "fbdisk/immersion.hpp"

#include "fbdisk/circle_pencil.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fbdisk {

using circle_pencil::TrigKernels;
using circle_pencil::trig_kernels;

TransversalityError::TransversalityError(double u_, double R_, double c_)
    : std::runtime_error("level plane not transversal: R = " + std::to_string(R_) +
                         " <= |c| = " + std::to_string(std::abs(c_)) +
                         " at u = " + std::to_string(u_)),
      u(u_), R(R_), c(c_) {}

int piece_of(const ScaledRibbon& rib, double u) {
    if (u <= -rib.u2()) return 1;
    if (u >= rib.u2()) return 3;
    return 2;
}

double domain_extent(const ScaledRibbon& rib, double u) {
    return circle_pencil::half_extent(std::min(norm(rib.gamma(u)), 1.0));
}

namespace {

// Scalar factors of psi = (gamma * Phi, Z) and their (w, v) partials, where
// w = |gamma|^2, xi = 4 w v^2/(1-w)^2, Phi = 1 + v^2 H(xi)/(1-w), Z = v Sc(xi).
// Phi is even in v, Z odd; both depend on u only through w, so the chain rule
// below stays smooth across gamma = 0.
struct ScalarJet {
    double Phi, Phi_w, Phi_ww, Phi_v, Phi_vv, Phi_wv;
    double Z, Z_w, Z_ww, Z_v, Z_vv, Z_wv;
};

ScalarJet scalar_jet(double w, double v) {
    const double om = 1.0 - w;
    const double om2 = om * om, om3 = om2 * om, om4 = om2 * om2;
    const double v2 = v * v;
    const double xi = 4.0 * w * v2 / om2;
    const double xi_w = 4.0 * v2 * (1.0 + w) / om3;
    const double xi_ww = 8.0 * v2 * (2.0 + w) / om4;
    const double xi_v = 8.0 * w * v / om2;
    const double xi_vv = 8.0 * w / om2;
    const double xi_wv = 8.0 * v * (1.0 + w) / om3;
    const TrigKernels k = trig_kernels(xi);

    ScalarJet s{};
    s.Phi = 1.0 + v2 * k.H / om;
    s.Phi_w = v2 * (k.Hp * xi_w / om + k.H / om2);
    s.Phi_ww = v2 * (k.Hpp * xi_w * xi_w / om + k.Hp * xi_ww / om +
                     2.0 * k.Hp * xi_w / om2 + 2.0 * k.H / om3);
    s.Phi_v = (2.0 * v * k.H + v2 * k.Hp * xi_v) / om;
    s.Phi_vv = (2.0 * k.H + 4.0 * v * k.Hp * xi_v + v2 * k.Hpp * xi_v * xi_v +
                v2 * k.Hp * xi_vv) / om;
    s.Phi_wv = (2.0 * v * k.Hp * xi_w + v2 * (k.Hpp * xi_v * xi_w + k.Hp * xi_wv)) / om +
               (2.0 * v * k.H + v2 * k.Hp * xi_v) / om2;
    s.Z = v * k.Sc;
    s.Z_v = k.Sc + v * k.Scp * xi_v;
    s.Z_vv = 2.0 * k.Scp * xi_v + v * k.Scpp * xi_v * xi_v + v * k.Scp * xi_vv;
    s.Z_w = v * k.Scp * xi_w;
    s.Z_ww = v * (k.Scpp * xi_w * xi_w + k.Scp * xi_ww);
    s.Z_wv = k.Scp * xi_w + v * (k.Scpp * xi_v * xi_w + k.Scp * xi_wv);
    return s;
}

SurfaceJet corner_jet(const ScaledRibbon& rib, double u) {
    // Collapsed corner (+-u3, 0): the surface is locally the flat axis plane,
    // but the v-family of circles shrinks to radius 0 and psi_vv diverges in
    // this chart. Report the planar limit with dvv zeroed.
    SurfaceJet j{};
    j.piece = piece_of(rib, u);
    const Vec2 g = rib.gamma(u), g1 = rib.gamma_d1(u);
    j.pos = {g.x, g.y, 0.0};
    j.du = {g1.x, g1.y, 0.0};
    j.dv = {0.0, 0.0, 1.0};
    j.duu = j.duv = j.dvv = {0.0, 0.0, 0.0};
    j.normal = normalized(cross(j.du, j.dv));
    j.E = dot(j.du, j.du);
    j.F = 0.0;
    j.G = 1.0;
    j.L = j.M = j.N2 = 0.0;
    j.K = j.H = j.k1 = j.k2 = 0.0;
    return j;
}

SurfaceJet eval_jet_impl(const ScaledRibbon& rib, double u, double v) {
    const Vec2 g = rib.gamma(u);
    const Vec2 g1 = rib.gamma_d1(u);
    const Vec2 g2 = rib.gamma_d2(u);
    const double w = dot(g, g);
    if (1.0 - w < 1e-14) return corner_jet(rib, u);
    const double wu = 2.0 * dot(g, g1);
    const double wuu = 2.0 * (dot(g1, g1) + dot(g, g2));
    const ScalarJet s = scalar_jet(w, v);

    SurfaceJet j{};
    j.piece = piece_of(rib, u);
    j.pos = {g.x * s.Phi, g.y * s.Phi, s.Z};
    j.du = {g1.x * s.Phi + g.x * s.Phi_w * wu,
            g1.y * s.Phi + g.y * s.Phi_w * wu,
            s.Z_w * wu};
    j.dv = {g.x * s.Phi_v, g.y * s.Phi_v, s.Z_v};
    const double pww = s.Phi_ww * wu * wu + s.Phi_w * wuu;
    j.duu = {g2.x * s.Phi + 2.0 * g1.x * s.Phi_w * wu + g.x * pww,
             g2.y * s.Phi + 2.0 * g1.y * s.Phi_w * wu + g.y * pww,
             s.Z_ww * wu * wu + s.Z_w * wuu};
    j.duv = {g1.x * s.Phi_v + g.x * s.Phi_wv * wu,
             g1.y * s.Phi_v + g.y * s.Phi_wv * wu,
             s.Z_wv * wu};
    j.dvv = {g.x * s.Phi_vv, g.y * s.Phi_vv, s.Z_vv};

    j.normal = normalized(cross(j.du, j.dv));
    j.E = dot(j.du, j.du);
    j.F = dot(j.du, j.dv);
    j.G = dot(j.dv, j.dv);
    j.L = dot(j.duu, j.normal);
    j.M = dot(j.duv, j.normal);
    j.N2 = dot(j.dvv, j.normal);
    const double det1 = j.E * j.G - j.F * j.F;
    j.K = (j.L * j.N2 - j.M * j.M) / det1;
    j.H = (j.E * j.N2 - 2.0 * j.F * j.M + j.G * j.L) / (2.0 * det1);
    const double disc = std::sqrt(std::max(j.H * j.H - j.K, 0.0));
    j.k1 = j.H + disc;
    j.k2 = j.H - disc;
    return j;
}

} // namespace

Vec3 eval_position(const ScaledRibbon& rib, double u, double v) {
    const Vec2 g = rib.gamma(u);
    const double w = dot(g, g);
    if (1.0 - w < 1e-14) return {g.x, g.y, 0.0};
    const double om = 1.0 - w;
    const double xi = 4.0 * w * v * v / (om * om);
    const TrigKernels k = trig_kernels(xi);
    const double Phi = 1.0 + v * v * k.H / om;
    return {g.x * Phi, g.y * Phi, v * k.Sc};
}

SurfaceJet eval_jet(const ScaledRibbon& rib, double u, double v) {
    if (std::abs(v) > domain_extent(rib, u) + 1e-12)
        throw std::domain_error("eval_jet: (u,v) outside the parameter disk");
    return eval_jet_impl(rib, u, v);
}

SurfaceJet eval_jet_extended(const ScaledRibbon& rib, double u, double v) {
    return eval_jet_impl(rib, u, v);
}

std::vector<DomainPoint> sample_grid(const ScaledRibbon& rib, int nu, int nv) {
    if (nu < 2 || nv < 2) throw std::invalid_argument("sample_grid: nu, nv must be >= 2");
    std::vector<DomainPoint> pts;
    pts.reserve(static_cast<std::size_t>(nu) * nv);
    const double u3 = rib.u3();
    for (int i = 0; i < nu; ++i) {
        const double u = grid_point(-u3, u3, i, nu);
        const double ve = domain_extent(rib, u);
        const int piece = piece_of(rib, u);
        if (ve == 0.0) {
            pts.push_back({u, 0.0, piece});
            continue;
        }
        for (int jj = 0; jj < nv; ++jj) {
            const double wj = -1.0 + 2.0 * jj / (nv - 1);
            pts.push_back({u, wj * ve, piece});
        }
    }
    return pts;
}

LevelCurvePoint level_curve(const ScaledRibbon& rib, double c, double u) {
    if (!(std::abs(u) < rib.u2()))
        throw std::domain_error("level_curve: u must lie in (-u2, u2)");
    const Vec2 g = rib.gamma(u);
    const Vec2 g1 = rib.gamma_d1(u);
    const Vec2 g2 = rib.gamma_d2(u);
    const double w = dot(g, g);
    const double om = 1.0 - w;
    const double R2 = om * om / (4.0 * w);
    const double rho = 1.0 - c * c / R2;
    if (!(rho > 0.0)) throw TransversalityError(u, std::sqrt(R2), c);

    // G_t/|gamma_t| as a function of w: gfun = 2 c^2 / ((1-w)(1 + sqrt(rho))),
    // the cancellation-free form of R(1 - sqrt(1 - (c/R)^2))/|gamma_t|.
    const double sq = std::sqrt(rho);
    const double P = 1.0 / om, Q = 1.0 / (1.0 + sq);
    const double rho_w = -4.0 * c * c * (1.0 + w) / (om * om * om);
    const double rho_ww = -8.0 * c * c * (2.0 + w) / (om * om * om * om);
    const double s_w = rho_w / (2.0 * sq);
    const double s_ww = rho_ww / (2.0 * sq) - rho_w * rho_w / (4.0 * sq * sq * sq);
    const double c2 = 2.0 * c * c;
    const double gfun = c2 * P * Q;
    const double g_w = c2 * (P * P * Q - P * s_w * Q * Q);
    const double g_ww = c2 * (2.0 * P * P * P * Q - 2.0 * P * P * s_w * Q * Q +
                              P * (2.0 * s_w * s_w * Q * Q * Q - s_ww * Q * Q));

    const double wu = 2.0 * dot(g, g1);
    const double wuu = 2.0 * (dot(g1, g1) + dot(g, g2));
    const double one = 1.0 + gfun;
    const Vec2 d1 = g1 * one + g * (g_w * wu);
    const Vec2 d2 = g2 * one + g1 * (2.0 * g_w * wu) + g * (g_ww * wu * wu + g_w * wuu);

    LevelCurvePoint out;
    out.u = u;
    out.pos = {g.x * one, g.y * one, c};
    out.d1 = {d1.x, d1.y, 0.0};
    out.d2 = {d2.x, d2.y, 0.0};
    const double speed = norm(d1);
    out.signed_curvature = cross(d1, d2) / (speed * speed * speed);
    const Vec2 n = rot90(d1);
    out.inner_normal = {n.x / speed, n.y / speed, 0.0};
    return out;
}

Vec3 boundary_curve(const ScaledRibbon& rib, int side, double u) {
    if (side != 1 && side != -1) throw std::invalid_argument("boundary_curve: side must be +-1");
    return eval_position(rib, u, side * domain_extent(rib, u));
}

double umbilic_deviation(const SurfaceJet& jet) { return std::abs(jet.k1 - jet.k2); }

} // namespace fbdisk

#ifndef FBDISK_IMMERSION_HPP
#define FBDISK_IMMERSION_HPP

#include "fbdisk/geometry.hpp"
#include "fbdisk/ribbon.hpp"

#include <stdexcept>
#include <vector>

namespace fbdisk {

// The disk immersion psi(u,v): the point at arc length v along the orthogonal
// circle through gamma_t(u). The parameter domain is
//   D = { (u,v) : u in [-u3, u3], |v| <= v_{gamma(u)} }.
// Pieces 1 (u <= -u2) and 3 (u >= u2) lie in the vertical planes {y = 0} and
// {x = 0}; piece 2 is the circle-foliated band over the convex arc.

struct DomainPoint {
    double u = 0.0;
    double v = 0.0;
    int piece = 2;
};

struct SurfaceJet {
    Vec3 pos, du, dv, duu, duv, dvv;
    Vec3 normal;                    // du x dv normalized: {du, dv, N} positively oriented
    double E = 0, F = 0, G = 0;     // first fundamental form
    double L = 0, M = 0, N2 = 0;    // second fundamental form
    double K = 0, H = 0;            // Gaussian and mean curvature
    double k1 = 0, k2 = 0;          // principal curvatures, k1 >= k2
    int piece = 2;
};

struct LevelCurvePoint {
    double u = 0.0;
    Vec3 pos;                  // on the plane {z = c}
    Vec3 d1, d2;               // derivatives in u (horizontal)
    double signed_curvature = 0.0;
    Vec3 inner_normal;         // horizontal unit normal, convex side positive
};

/// Thrown when a horizontal plane fails to cut the circle family transversally
/// (R <= |c|), signalling that t is too large for this level.
struct TransversalityError : std::runtime_error {
    double u, R, c;
    TransversalityError(double u_, double R_, double c_);
};

int piece_of(const ScaledRibbon& rib, double u);

/// Half-extent v_{gamma(u)} of the circle through gamma_t(u); equals 1 where
/// the curve crosses the origin and 0 at u = +-u3.
double domain_extent(const ScaledRibbon& rib, double u);

/// Position only (cheaper than a full jet).
Vec3 eval_position(const ScaledRibbon& rib, double u, double v);

/// Full second-order jet with fundamental forms and curvatures.
/// Requires (u, v) in D. At the two collapsed corners (+-u3, 0) the (u,v)
/// chart degenerates (the circle radius tends to 0); the planar limit jet is
/// returned there with dvv set to zero.
SurfaceJet eval_jet(const ScaledRibbon& rib, double u, double v);

/// Same evaluation without the |v| <= v_p domain clamp: the circle formulas
/// extend smoothly beyond the sphere as long as |v/R| < pi. Used by checks
/// that follow a horizontal level across the whole arc, where levels near
/// |c| = 1 leave the closed ball.
SurfaceJet eval_jet_extended(const ScaledRibbon& rib, double u, double v);

/// Tensor sample of D: nu uniform u-columns, nv points per column at
/// v = w_j * v_p(u), w_j uniform in [-1,1]. Columns with v_p = 0 collapse to
/// a single point. Odd nu, nv keep the u = 0 and v = 0 lines in the grid.
std::vector<DomainPoint> sample_grid(const ScaledRibbon& rib, int nu, int nv);

/// Horizontal level curve of the band piece at height c, parametrized over
/// the arc parameter u in (-u2, u2). Throws TransversalityError when R <= |c|.
LevelCurvePoint level_curve(const ScaledRibbon& rib, double c, double u);

/// Boundary trace psi(u, side * v_p(u)); lies on the unit sphere.
Vec3 boundary_curve(const ScaledRibbon& rib, int side, double u);

/// |k1 - k2|; zero exactly on the planar pieces.
double umbilic_deviation(const SurfaceJet& jet);

} // namespace fbdisk

#endif

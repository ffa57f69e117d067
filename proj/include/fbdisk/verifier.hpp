#ifndef FBDISK_VERIFIER_HPP
#define FBDISK_VERIFIER_HPP

#include "fbdisk/immersion.hpp"
#include "fbdisk/ribbon.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbdisk {

// Grid certification of the geometric claims: every "for all" statement is
// checked on a finite grid with an explicit margin. Strict inequalities use a
// floor margin of 1e-12 so a numerical zero never passes. This is evidence at
// grid resolution, not a proof.

constexpr double kStrictSignFloor = 1e-12;
// Scans of strict-sign quantities on the band piece stay this fraction of u2
// away from the flat junctions, where the quantities vanish to infinite
// order and underflow.
constexpr double kGluingInsetFraction = 0.05;
// Horizontal levels with |c| <= 1 are extracted only when every circle of the
// band has radius at least 1 + this margin.
constexpr double kTransversalityMargin = 1e-3;

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst_residual = 0.0;  // the binding margin or max residual
    double worst_u = 0.0;
    double worst_v = 0.0;
    bool worst_has_v = false;
    int nu = 0, nv = 0;
    double tolerance = 0.0;
};

struct VerificationReport {
    double u1 = 0, u2 = 0, u3 = 0, a = 0, d = 0, turning = 0;  // ribbon summary
    double t = 1.0;
    std::vector<CheckResult> checks;
    double saddle_margin = 0.0;  // -max K over the sampled band
    std::optional<double> t0_witness;

    bool all_passed() const;
};

/// find_t0 could not certify the predicate anywhere in the range.
struct NoWitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Free-boundary test: at n boundary samples per side, |<N, psi>| <= 1e-8 and
/// ||psi| - 1| <= 1e-10. normal_offset shifts samples along N and exists to
/// synthesize a violating surface in control tests.
CheckResult check_free_boundary(const ScaledRibbon& rib, int n, double normal_offset = 0.0);

/// Positivity of the normal curvature <psi_vv, N> of the foliating circles
/// over an inset band grid. flip_orientation reverses the Gauss map (control).
CheckResult check_circle_normal_curvature(const ScaledRibbon& rib, int nu, int nv,
                                          bool flip_orientation = false);

/// For each level c: the level curve is convex (signed curvature > floor) and
/// its inner normal opposes the surface normal (<n, N> < -floor) along the
/// arc. Throws TransversalityError when some circle radius drops to <= 1 +
/// margin, which signals t too large for |c| <= 1.
CheckResult check_level_curves(const ScaledRibbon& rib, const std::vector<double>& cs, int nu);

/// max K <= 1e-10 over a full-domain grid; the planar pieces contribute exact
/// zeros. curvature_offset biases the sampled K (control tests).
CheckResult check_saddle(const ScaledRibbon& rib, int nu, int nv, double curvature_offset = 0.0);

/// min |det[gamma, gamma']| > 1e-10 over an inset arc grid.
CheckResult check_linear_independence(const Ribbon& rib, int n);

/// -max K over an inset band grid (the planar pieces would pin it to 0).
double saddle_margin(const ScaledRibbon& rib, int nu, int nv);

/// Smallest circle radius R over the band, with its location.
std::pair<double, double> min_circle_radius(const ScaledRibbon& rib, int n = 2048);
bool transversal_for_unit_levels(const ScaledRibbon& rib, int n = 2048);

std::vector<double> default_c_samples(int count = 9);

/// Bisect for a grid-certified witness t0 of the saddle deformation: the
/// largest tested t in [t_lo, t_hi] where transversality, the saddle scan and
/// the level-curve checks all hold. The predicate is not assumed monotone;
/// the result is a witness, not a supremum. Throws NoWitnessError when the
/// predicate already fails at t_lo.
double find_t0(const Ribbon& rib, int nu, int nv, double t_lo, double t_hi, int iters,
               const std::vector<double>& cs = default_c_samples());

bool saddle_predicate(const Ribbon& rib, double t, int nu, int nv,
                      const std::vector<double>& cs = default_c_samples());

/// Full check battery at a fixed t; a transversality failure is recorded as a
/// failed level-curves entry rather than propagated.
VerificationReport run_verification(const Ribbon& rib, double t, int nu, int nv,
                                    int c_samples = 9);

namespace detail {
/// min |det[c(u), c'(u)]| over a grid; shared by the linear-independence
/// check and its degenerate-curve control tests.
std::pair<double, double> min_abs_det(const std::function<Vec2(double)>& c,
                                      const std::function<Vec2(double)>& c1,
                                      double lo, double hi, int n);
} // namespace detail

} // namespace fbdisk

#endif

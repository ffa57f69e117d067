#include "fbdisk/verifier.hpp"

#include "fbdisk/circle_pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fbdisk {

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

CheckResult check_free_boundary(const ScaledRibbon& rib, int n, double normal_offset) {
    if (n < 2) throw std::invalid_argument("check_free_boundary: n must be >= 2");
    CheckResult res;
    res.name = "free-boundary";
    res.nu = n;
    res.nv = 2;
    res.tolerance = 1e-8;
    res.worst_has_v = true;
    const double u3 = rib.u3();
    double worst_orth = 0.0, worst_pos = 0.0;
    for (int side = -1; side <= 1; side += 2) {
        for (int i = 0; i < n; ++i) {
            const double u = grid_point(-u3, u3, i, n);
            const double vp = domain_extent(rib, u);
            const SurfaceJet j = eval_jet(rib, u, side * vp);
            const Vec3 pos = j.pos + normal_offset * j.normal;
            const double orth = std::abs(dot(j.normal, pos));
            const double posr = std::abs(norm(pos) - 1.0);
            if (orth > worst_orth) {
                worst_orth = orth;
                res.worst_u = u;
                res.worst_v = side * vp;
            }
            worst_pos = std::max(worst_pos, posr);
        }
    }
    res.worst_residual = std::max(worst_orth, worst_pos);
    res.passed = worst_orth <= 1e-8 && worst_pos <= 1e-10;
    return res;
}

CheckResult check_circle_normal_curvature(const ScaledRibbon& rib, int nu, int nv,
                                          bool flip_orientation) {
    if (nu < 2 || nv < 2)
        throw std::invalid_argument("check_circle_normal_curvature: nu, nv must be >= 2");
    CheckResult res;
    res.name = "circle-normal-curvature";
    res.nu = nu;
    res.nv = nv;
    res.tolerance = kStrictSignFloor;
    res.worst_has_v = true;
    const double ulim = rib.u2() * (1.0 - kGluingInsetFraction);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nu; ++i) {
        const double u = grid_point(-ulim, ulim, i, nu);
        const double vp = domain_extent(rib, u);
        for (int jj = 0; jj < nv; ++jj) {
            const double v = grid_point(-1.0, 1.0, jj, nv) * vp;
            const SurfaceJet j = eval_jet(rib, u, v);
            const double n2 = flip_orientation ? -j.N2 : j.N2;
            if (n2 < worst) {
                worst = n2;
                res.worst_u = u;
                res.worst_v = v;
            }
        }
    }
    res.worst_residual = worst;
    res.passed = worst > kStrictSignFloor;
    return res;
}

CheckResult check_level_curves(const ScaledRibbon& rib, const std::vector<double>& cs, int nu) {
    if (cs.empty() || nu < 2)
        throw std::invalid_argument("check_level_curves: need levels and nu >= 2");
    if (!transversal_for_unit_levels(rib)) {
        const auto [rmin, at] = min_circle_radius(rib);
        throw TransversalityError(at, rmin, 1.0);
    }
    CheckResult res;
    res.name = "level-curves";
    res.nu = nu;
    res.nv = static_cast<int>(cs.size());
    res.tolerance = kStrictSignFloor;
    res.worst_has_v = true;  // worst_v carries the level c
    const double ulim = rib.u2() * (1.0 - kGluingInsetFraction);
    double worst = std::numeric_limits<double>::infinity();
    for (const double c : cs) {
        for (int i = 0; i < nu; ++i) {
            const double u = grid_point(-ulim, ulim, i, nu);
            const LevelCurvePoint lc = level_curve(rib, c, u);
            // preimage of the level on the circle through gamma_t(u)
            const double m = norm(rib.gamma(u));
            const double R = circle_pencil::radius(m);
            const double vc = R * std::asin(c / R);
            const SurfaceJet j = eval_jet_extended(rib, u, vc);
            const double convexity = lc.signed_curvature;
            const double opposition = -dot(lc.inner_normal, j.normal);
            const double margin = std::min(convexity, opposition);
            if (margin < worst) {
                worst = margin;
                res.worst_u = u;
                res.worst_v = c;
            }
        }
    }
    res.worst_residual = worst;
    res.passed = worst > kStrictSignFloor;
    return res;
}

CheckResult check_saddle(const ScaledRibbon& rib, int nu, int nv, double curvature_offset) {
    CheckResult res;
    res.name = "saddle";
    res.nu = nu;
    res.nv = nv;
    res.tolerance = 1e-10;
    res.worst_has_v = true;
    double worst = -std::numeric_limits<double>::infinity();
    for (const DomainPoint& p : sample_grid(rib, nu, nv)) {
        const SurfaceJet j = eval_jet(rib, p.u, p.v);
        const double k = j.K + curvature_offset;
        if (k > worst) {
            worst = k;
            res.worst_u = p.u;
            res.worst_v = p.v;
        }
    }
    res.worst_residual = worst;
    res.passed = worst <= 1e-10;
    return res;
}

namespace detail {
std::pair<double, double> min_abs_det(const std::function<Vec2(double)>& c,
                                      const std::function<Vec2(double)>& c1,
                                      double lo, double hi, int n) {
    double worst = std::numeric_limits<double>::infinity(), at = lo;
    for (int i = 0; i < n; ++i) {
        const double u = grid_point(lo, hi, i, n);
        const double det = std::abs(cross(c(u), c1(u)));
        if (det < worst) {
            worst = det;
            at = u;
        }
    }
    return {worst, at};
}
} // namespace detail

CheckResult check_linear_independence(const Ribbon& rib, int n) {
    if (n < 2) throw std::invalid_argument("check_linear_independence: n must be >= 2");
    CheckResult res;
    res.name = "linear-independence";
    res.nu = n;
    res.nv = 1;
    res.tolerance = 1e-10;
    const double ulim = rib.u2() * (1.0 - kGluingInsetFraction);
    auto [worst, at] = detail::min_abs_det([&](double u) { return rib.gamma(u); },
                                           [&](double u) { return rib.gamma_d1(u); },
                                           -ulim, ulim, n);
    res.worst_residual = worst;
    res.worst_u = at;
    res.passed = worst > 1e-10;
    return res;
}

double saddle_margin(const ScaledRibbon& rib, int nu, int nv) {
    const double ulim = rib.u2() * (1.0 - kGluingInsetFraction);
    double kmax = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < nu; ++i) {
        const double u = grid_point(-ulim, ulim, i, nu);
        const double vp = domain_extent(rib, u);
        for (int jj = 0; jj < nv; ++jj) {
            const double v = grid_point(-1.0, 1.0, jj, nv) * vp;
            kmax = std::max(kmax, eval_jet(rib, u, v).K);
        }
    }
    return -kmax;
}

std::pair<double, double> min_circle_radius(const ScaledRibbon& rib, int n) {
    // R is decreasing in |gamma|, so scan for the largest |gamma| on the arc.
    double mmax = 0.0, at = 0.0;
    const double u2 = rib.u2();
    for (int i = 0; i <= n; ++i) {
        const double u = -u2 + 2.0 * u2 * i / n;
        const double m = norm(rib.gamma(u));
        if (m > mmax) {
            mmax = m;
            at = u;
        }
    }
    return {circle_pencil::radius(mmax), at};
}

bool transversal_for_unit_levels(const ScaledRibbon& rib, int n) {
    return min_circle_radius(rib, n).first >= 1.0 + kTransversalityMargin;
}

std::vector<double> default_c_samples(int count) {
    std::vector<double> cs(count);
    for (int i = 0; i < count; ++i) cs[i] = -1.0 + 2.0 * i / (count - 1);
    return cs;
}

bool saddle_predicate(const Ribbon& rib, double t, int nu, int nv,
                      const std::vector<double>& cs) {
    const ScaledRibbon sr(rib, t);
    if (!transversal_for_unit_levels(sr)) return false;
    try {
        if (!check_level_curves(sr, cs, nu).passed) return false;
    } catch (const TransversalityError&) {
        return false;
    }
    return check_saddle(sr, nu, nv).passed;
}

double find_t0(const Ribbon& rib, int nu, int nv, double t_lo, double t_hi, int iters,
               const std::vector<double>& cs) {
    if (!(t_lo > 0.0) || !(t_lo < t_hi) || !(t_hi <= 1.0))
        throw std::invalid_argument("find_t0: need 0 < t_lo < t_hi <= 1");
    auto P = [&](double t) { return saddle_predicate(rib, t, nu, nv, cs); };
    if (!P(t_lo)) throw NoWitnessError("no saddle witness in range");
    if (P(t_hi)) return t_hi;
    double lo = t_lo, hi = t_hi;
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (P(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

VerificationReport run_verification(const Ribbon& rib, double t, int nu, int nv,
                                    int c_samples) {
    VerificationReport rep;
    rep.u1 = rib.u1();
    rep.u2 = rib.u2();
    rep.u3 = rib.u3();
    rep.a = rib.a();
    rep.d = rib.d();
    rep.turning = rib.turning();
    rep.t = t;
    const ScaledRibbon sr(rib, t);

    const int n_boundary = std::max(1000, 5 * nu);
    rep.checks.push_back(check_free_boundary(sr, n_boundary));
    rep.checks.push_back(check_circle_normal_curvature(sr, nu, nv));
    rep.checks.push_back(check_linear_independence(rib, n_boundary));
    rep.checks.push_back(check_saddle(sr, nu, nv));
    rep.saddle_margin = saddle_margin(sr, nu, nv);
    try {
        rep.checks.push_back(check_level_curves(sr, default_c_samples(c_samples), nu));
    } catch (const TransversalityError& e) {
        CheckResult fail;
        fail.name = "level-curves";
        fail.passed = false;
        fail.worst_residual = e.R - (1.0 + kTransversalityMargin);  // negative margin
        fail.worst_u = e.u;
        fail.nu = nu;
        fail.nv = c_samples;
        fail.tolerance = kStrictSignFloor;
        rep.checks.push_back(fail);
    }
    return rep;
}

} // namespace fbdisk

#include "fbdisk/ribbon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fbdisk {

namespace {

constexpr int kPanelDegree = 16;
// Strict-sign properties (kappa > 0, monotone decrease, quadrant margins) are
// validated on this inset sub-interval: the profile vanishes to infinite
// order at +-u2, so near the junctions the quantities drop below DBL_MIN and
// carry no usable sign.
constexpr double kInsetFraction = 0.05;
constexpr double kStrictFloor = 1e-12;
constexpr double kIdentityTol = 1e-9;

double bump_profile(double u, const RibbonSpec& s) {
    const double r = u / s.u2;
    const double tau = 1.0 - r * r;
    if (tau <= 0.0) return 0.0;
    const double e = s.s / std::pow(tau, s.q);
    return (e > 745.0) ? 0.0 : std::exp(-e);  // exp underflow guard
}

} // namespace

void RibbonSpec::validate() const {
    if (!(u2 > 0.0)) throw std::invalid_argument("RibbonSpec: u2 must be positive");
    if (!(s > 0.0)) throw std::invalid_argument("RibbonSpec: s must be positive");
    if (!(q >= 1.0)) throw std::invalid_argument("RibbonSpec: q must be >= 1");
    if (quadrature_n < 64) throw std::invalid_argument("RibbonSpec: quadrature_n must be >= 64");
}

double Ribbon::theta(double u) const {
    const double u2 = data_->spec.u2;
    if (u <= -u2) return 0.0;
    if (u >= u2) return 1.5 * M_PI;
    return 0.75 * M_PI + data_->amplitude * (data_->bump.eval(u) - data_->bump_at_0);
}

double Ribbon::kappa(double u) const {
    if (std::abs(u) > data_->u3 + 1e-12) throw std::domain_error("kappa: u outside [-u3, u3]");
    return data_->amplitude * bump_profile(u, data_->spec);
}

Vec2 Ribbon::gamma(double u) const {
    const double u2 = data_->spec.u2, u3 = data_->u3;
    if (std::abs(u) > u3 + 1e-12) throw std::domain_error("gamma: u outside [-u3, u3]");
    // endpoints pinned so the segments land on the unit circle exactly
    if (u >= u3) return {0.0, -1.0};
    if (u <= -u3) return {-1.0, 0.0};
    if (u >= u2) return {0.0, data_->a - (u - u2)};
    if (u <= -u2) return {data_->a + (u + u2), 0.0};
    return {data_->d + (data_->cos_th.eval(u) - data_->cos_at_0),
            data_->d + (data_->sin_th.eval(u) - data_->sin_at_0)};
}

Vec2 Ribbon::gamma_d1(double u) const {
    const double th = theta(u);
    if (std::abs(u) > data_->u3 + 1e-12) throw std::domain_error("gamma_d1: u outside [-u3, u3]");
    return {std::cos(th), std::sin(th)};
}

Vec2 Ribbon::gamma_d2(double u) const {
    const double k = kappa(u);
    const double th = theta(u);
    return {-k * std::sin(th), k * std::cos(th)};
}

Vec2 eval_gamma(const Ribbon& r, double u, int order) {
    switch (order) {
        case 0: return r.gamma(u);
        case 1: return r.gamma_d1(u);
        case 2: return r.gamma_d2(u);
        default: throw std::invalid_argument("eval_gamma: order must be 0, 1 or 2");
    }
}

std::variant<Ribbon, ValidationFailure> build_ribbon(const RibbonSpec& spec) {
    spec.validate();
    auto data = std::make_shared<Ribbon::Data>();
    data->spec = spec;
    const double u2 = spec.u2;

    int panels = spec.quadrature_n;
    if (panels % 2 != 0) ++panels;  // keep u = 0 on a panel boundary

    data->bump = CumulativeIntegral(-u2, u2, panels, kPanelDegree,
                                    [&](double u) { return bump_profile(u, spec); });
    const double total_bump = data->bump.total();
    if (!(total_bump > 0.0))
        return ValidationFailure{"profile-mass", 0.0, total_bump,
                                 "curvature profile integrates to zero"};
    data->amplitude = 1.5 * M_PI / total_bump;
    data->bump_at_0 = data->bump.eval(0.0);

    const double A = data->amplitude, B0 = data->bump_at_0;
    auto theta_of = [&](double u) { return 0.75 * M_PI + A * (data->bump.eval(u) - B0); };
    data->cos_th = CumulativeIntegral(-u2, u2, panels, kPanelDegree,
                                      [&](double u) { return std::cos(theta_of(u)); });
    data->sin_th = CumulativeIntegral(-u2, u2, panels, kPanelDegree,
                                      [&](double u) { return std::sin(theta_of(u)); });
    data->cos_at_0 = data->cos_th.eval(0.0);
    data->sin_at_0 = data->sin_th.eval(0.0);

    data->d = -(data->cos_th.eval(u2) - data->cos_at_0);
    data->a = data->d + (data->sin_th.eval(u2) - data->sin_at_0);
    data->u3 = u2 + 1.0 + data->a;
    data->u1 = u2 / 10.0;
    data->turning = theta_of(u2) - theta_of(-u2);

    Ribbon rib(data);

    // --- definition-of-ribbon validation ---
    if (!(data->d > 0.0))
        return ValidationFailure{"offset-positive", 0.0, data->d,
                                 "gamma(0) = (d,d) requires d > 0"};
    if (!(data->a > 0.0 && data->a < 1.0))
        return ValidationFailure{"a-range", u2, data->a,
                                 "arc endpoint height a must lie in (0,1)"};
    if (std::abs(data->turning - 1.5 * M_PI) > kIdentityTol)
        return ValidationFailure{"turning", u2, std::abs(data->turning - 1.5 * M_PI),
                                 "total turning of the arc must equal 3*pi/2"};

    {  // symmetry across {x = y}: swap(gamma(u)) = gamma(-u)
        double worst = 0.0, at = 0.0;
        const int n = 1000;
        for (int i = 0; i <= n; ++i) {
            const double u = -u2 + 2.0 * u2 * i / n;
            const Vec2 res = swap_xy(rib.gamma(u)) - rib.gamma(-u);
            const double e = norm(res);
            if (e > worst) { worst = e; at = u; }
        }
        if (worst > kIdentityTol)
            return ValidationFailure{"symmetry", at, worst, "swap(gamma(u)) != gamma(-u)"};
    }

    const double inset = kInsetFraction * u2;
    {  // strict convexity and monotone decrease of kappa past u1
        const int n = 2000;
        double prev = rib.kappa(data->u1);
        for (int i = 0; i <= n; ++i) {
            const double u = -u2 + inset + (2.0 * u2 - 2.0 * inset) * i / n;
            const double k = rib.kappa(u);
            if (!(k > kStrictFloor))
                return ValidationFailure{"curvature-positive", u, k,
                                         "kappa must be strictly positive on the arc"};
        }
        const int nd = 1000;
        for (int i = 1; i <= nd; ++i) {
            const double u = data->u1 + (u2 - inset - data->u1) * i / nd;
            const double k = rib.kappa(u);
            if (!(k < prev))
                return ValidationFailure{"curvature-decreasing", u, k - prev,
                                         "kappa must decrease strictly on (u1, u2)"};
            prev = k;
        }
    }

    {  // open quadrant and open unit disk containment
        const int n = 2000;
        for (int i = 0; i <= n; ++i) {
            const double u = -u2 + 2.0 * u2 * i / n;
            const Vec2 g = rib.gamma(u);
            const bool interior = std::abs(u) <= u2 - inset;
            const double floor = interior ? kStrictFloor : -kStrictFloor;
            if (!(g.x > floor) || !(g.y > floor))
                return ValidationFailure{"containment", u, std::min(g.x, g.y),
                                         "arc must stay in the open quadrant (0,1)x(0,1)"};
            const double r = norm(g);
            if (!(r < 1.0 - kStrictFloor))
                return ValidationFailure{"containment", u, r - 1.0,
                                         "arc must stay inside the open unit disk"};
        }
    }

    {  // embeddedness of the convex arc
        const int n = 800;
        const double delta = 2.0 * u2 / 100.0;
        std::vector<Vec2> pts(n + 1);
        for (int i = 0; i <= n; ++i) pts[i] = rib.gamma(-u2 + 2.0 * u2 * i / n);
        const double step = 2.0 * u2 / n;
        const int skip = static_cast<int>(std::ceil(delta / step));
        for (int i = 0; i <= n; ++i)
            for (int j = i + skip; j <= n; ++j) {
                const double dist = norm(pts[i] - pts[j]);
                if (dist < 0.5 * delta)
                    return ValidationFailure{"embeddedness", -u2 + step * i, dist,
                                             "arc approaches itself at separated parameters"};
            }
    }

    return rib;
}

Ribbon build_ribbon_or_throw(const RibbonSpec& spec) {
    auto res = build_ribbon(spec);
    if (auto* fail = std::get_if<ValidationFailure>(&res))
        throw std::runtime_error("build_ribbon: " + fail->property + ": " + fail->message);
    return std::get<Ribbon>(res);
}

ScaledRibbon::ScaledRibbon(Ribbon base, double t) : base_(std::move(base)), t_(t) {
    if (!(t > 0.0) || t > 1.0) throw std::domain_error("ScaledRibbon: t must lie in (0,1]");
    u3t_ = base_.u2() + (1.0 + t * base_.a()) / t;
}

Vec2 ScaledRibbon::gamma(double u) const {
    const double u2 = base_.u2();
    if (std::abs(u) > u3t_ + 1e-12) throw std::domain_error("gamma: u outside [-u3t, u3t]");
    if (u >= u3t_) return {0.0, -1.0};
    if (u <= -u3t_) return {-1.0, 0.0};
    if (u >= u2) return {0.0, t_ * base_.a() - t_ * (u - u2)};
    if (u <= -u2) return {t_ * base_.a() + t_ * (u + u2), 0.0};
    return t_ * base_.gamma(u);
}

Vec2 ScaledRibbon::gamma_d1(double u) const {
    const double u2 = base_.u2();
    if (std::abs(u) > u3t_ + 1e-12) throw std::domain_error("gamma_d1: u outside [-u3t, u3t]");
    if (u >= u2) return {0.0, -t_};
    if (u <= -u2) return {t_, 0.0};
    return t_ * base_.gamma_d1(u);
}

Vec2 ScaledRibbon::gamma_d2(double u) const {
    const double u2 = base_.u2();
    if (std::abs(u) > u3t_ + 1e-12) throw std::domain_error("gamma_d2: u outside [-u3t, u3t]");
    if (std::abs(u) >= u2) return {0.0, 0.0};
    return t_ * base_.gamma_d2(u);
}

double ScaledRibbon::kappa(double u) const {
    if (std::abs(u) > u3t_ + 1e-12) throw std::domain_error("kappa: u outside [-u3t, u3t]");
    if (std::abs(u) >= base_.u2()) return 0.0;
    return base_.kappa(u) / t_;
}

ScaledRibbon scale(const Ribbon& r, double t) { return ScaledRibbon(r, t); }

double kappa_of(const Ribbon& r, double u) { return r.kappa(u); }
double kappa_of(const ScaledRibbon& r, double u) { return r.kappa(u); }

} // namespace fbdisk

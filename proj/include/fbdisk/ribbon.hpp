#ifndef FBDISK_RIBBON_HPP
#define FBDISK_RIBBON_HPP

#include "fbdisk/chebyshev.hpp"
#include "fbdisk/geometry.hpp"

#include <memory>
#include <string>
#include <variant>

namespace fbdisk {

/// Parameters of the curvature-profile family generating a ribbon curve.
/// The profile is the flat bump
///   kappa(u) = A * exp(-s / (1 - (u/u2)^2)^q)   for |u| < u2,  0 beyond,
/// with A normalizing the total turning of the convex arc to 3*pi/2. It is
/// C-infinity, even, vanishes to infinite order at +-u2 and is strictly
/// decreasing on (0, u2).
struct RibbonSpec {
    double u2 = 0.8;       ///< arc-length half-extent of the convex part
    double s = 0.5;        ///< sharpness, > 0
    double q = 1.0;        ///< exponent, >= 1
    int quadrature_n = 64; ///< panel count for arc integration, >= 64

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// A named failure of one of the ribbon-definition properties.
struct ValidationFailure {
    std::string property;
    double worst_point = 0.0;
    double residual = 0.0;
    std::string message;
};

/// A realized ribbon curve: two axis segments reaching (0,-1) and (-1,0),
/// joined by a strictly convex arc in the open first quadrant, symmetric
/// across {x = y}, parametrized by arc length on [-u3, u3]. Immutable and
/// cheap to copy; all evaluators are pure.
class Ribbon {
public:
    const RibbonSpec& spec() const { return data_->spec; }
    double u1() const { return data_->u1; }
    double u2() const { return data_->spec.u2; }
    double u3() const { return data_->u3; }
    /// Height a of the arc endpoint (0, a); the segments span [-1, a].
    double a() const { return data_->a; }
    /// Diagonal offset of the symmetry point: gamma(0) = (d, d).
    double d() const { return data_->d; }
    /// Total turning of the convex arc, theta(u2) - theta(-u2).
    double turning() const { return data_->turning; }

    /// Tangent angle; constant 0 / 3*pi/2 on the segments.
    double theta(double u) const;
    /// Signed curvature; 0 on the segments.
    double kappa(double u) const;

    Vec2 gamma(double u) const;
    Vec2 gamma_d1(double u) const;
    Vec2 gamma_d2(double u) const;

private:
    friend std::variant<Ribbon, ValidationFailure> build_ribbon(const RibbonSpec&);

    struct Data {
        RibbonSpec spec;
        double amplitude = 0.0; // A
        double d = 0.0, a = 0.0, u1 = 0.0, u3 = 0.0, turning = 0.0;
        CumulativeIntegral bump;    // integral of the profile from -u2
        double bump_at_0 = 0.0;
        CumulativeIntegral cos_th;  // integral of cos(theta) from -u2
        CumulativeIntegral sin_th;
        double cos_at_0 = 0.0, sin_at_0 = 0.0;
    };
    explicit Ribbon(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

/// Construct and numerically validate a ribbon. Returns the named violated
/// property instead of a ribbon when the profile parameters do not produce
/// a valid curve (e.g. the arc exits the quadrant or a falls outside (0,1)).
std::variant<Ribbon, ValidationFailure> build_ribbon(const RibbonSpec& spec);

/// Convenience wrapper throwing std::runtime_error on validation failure.
Ribbon build_ribbon_or_throw(const RibbonSpec& spec);

/// gamma / gamma' / gamma'' dispatch; order must be 0, 1 or 2.
Vec2 eval_gamma(const Ribbon& r, double u, int order);

/// The homothety deformation: the convex arc scaled by t and re-extended
/// along the axes to (0,-1) and (-1,0). Parametrized at constant speed t on
/// the whole of [-u3t, u3t], so the curve stays C-infinity across the flat
/// junctions; u3t = u2 + (1 + t*a)/t.
class ScaledRibbon {
public:
    /// t = 1 embeds a plain ribbon (trace and parametrization coincide).
    ScaledRibbon(Ribbon base, double t = 1.0);

    const Ribbon& base() const { return base_; }
    double t() const { return t_; }
    double u2() const { return base_.u2(); }
    double u3() const { return u3t_; }
    double a() const { return base_.a(); }

    Vec2 gamma(double u) const;
    Vec2 gamma_d1(double u) const;
    Vec2 gamma_d2(double u) const;
    /// Signed curvature of the scaled curve: kappa_base(u)/t on the arc.
    double kappa(double u) const;

private:
    Ribbon base_;
    double t_ = 1.0;
    double u3t_ = 0.0;
};

ScaledRibbon scale(const Ribbon& r, double t);

double kappa_of(const Ribbon& r, double u);
double kappa_of(const ScaledRibbon& r, double u);

} // namespace fbdisk

#endif

#ifndef FBDISK_CHEBYSHEV_HPP
#define FBDISK_CHEBYSHEV_HPP

#include <functional>
#include <vector>

namespace fbdisk {

/// Chebyshev series sum(c_k T_k) on [center - halfwidth, center + halfwidth].
struct ChebSeries {
    double center = 0.0;
    double halfwidth = 1.0;
    std::vector<double> coef;

    double eval(double x) const;
};

/// Interpolate f at n+1 Chebyshev-Lobatto nodes of the interval.
ChebSeries cheb_fit(double center, double halfwidth, int degree,
                    const std::function<double(double)>& f);

/// Series of x -> integral of p from the left interval end to x.
ChebSeries cheb_antiderivative(const ChebSeries& p);

/// Cumulative integral of a smooth function over [lo, hi], represented as
/// per-panel Chebyshev antiderivatives with exact running sums at the panel
/// boundaries. Evaluation is O(degree).
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;
    CumulativeIntegral(double lo, double hi, int panels, int degree,
                       const std::function<double(double)>& f);

    /// integral of f over [lo, x]; x clamped to [lo, hi].
    double eval(double x) const;
    double total() const { return boundary_.empty() ? 0.0 : boundary_.back(); }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
    double panel_width_ = 1.0;
    std::vector<ChebSeries> anti_;      // per panel, zero at the panel's left end
    std::vector<double> boundary_;      // running integral at panel boundaries
};

} // namespace fbdisk

#endif

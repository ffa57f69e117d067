#include "fbdisk/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fbdisk {

double ChebSeries::eval(double x) const {
    const double y = (x - center) / halfwidth;
    // Clenshaw recurrence.
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = coef.size(); k-- > 1;) {
        const double b0 = 2.0 * y * b1 - b2 + coef[k];
        b2 = b1;
        b1 = b0;
    }
    return y * b1 - b2 + (coef.empty() ? 0.0 : coef[0]);
}

ChebSeries cheb_fit(double center, double halfwidth, int degree,
                    const std::function<double(double)>& f) {
    const int n = degree;
    std::vector<double> val(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double y = std::cos(M_PI * j / n);
        val[j] = f(center + halfwidth * y);
    }
    ChebSeries s;
    s.center = center;
    s.halfwidth = halfwidth;
    s.coef.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double acc = 0.5 * (val[0] + (k % 2 == 0 ? val[n] : -val[n]));
        for (int j = 1; j < n; ++j) acc += val[j] * std::cos(M_PI * j * k / n);
        double c = 2.0 * acc / n;
        if (k == 0 || k == n) c *= 0.5;
        s.coef[k] = c;
    }
    return s;
}

ChebSeries cheb_antiderivative(const ChebSeries& p) {
    const auto& b = p.coef;
    const int n = static_cast<int>(b.size()) - 1;
    ChebSeries out;
    out.center = p.center;
    out.halfwidth = p.halfwidth;
    out.coef.assign(n + 2, 0.0);
    auto at = [&](int k) { return (k >= 0 && k <= n) ? b[k] : 0.0; };
    for (int m = 1; m <= n + 1; ++m) {
        const double prev = (m == 1) ? 2.0 * at(0) : at(m - 1);
        out.coef[m] = p.halfwidth * (prev - at(m + 1)) / (2.0 * m);
    }
    // Fix the constant so the antiderivative vanishes at the left end (y = -1).
    double at_left = 0.0;
    for (int m = 1; m <= n + 1; ++m) at_left += (m % 2 == 0 ? out.coef[m] : -out.coef[m]);
    out.coef[0] = -at_left;
    return out;
}

CumulativeIntegral::CumulativeIntegral(double lo, double hi, int panels, int degree,
                                       const std::function<double(double)>& f)
    : lo_(lo), hi_(hi) {
    if (!(hi > lo) || panels < 1 || degree < 2)
        throw std::invalid_argument("CumulativeIntegral: bad arguments");
    panel_width_ = (hi - lo) / panels;
    anti_.reserve(panels);
    boundary_.assign(panels + 1, 0.0);
    for (int k = 0; k < panels; ++k) {
        const double a = lo + k * panel_width_;
        const double c = a + 0.5 * panel_width_;
        ChebSeries fit = cheb_fit(c, 0.5 * panel_width_, degree, f);
        anti_.push_back(cheb_antiderivative(fit));
        boundary_[k + 1] = boundary_[k] + anti_.back().eval(a + panel_width_);
    }
}

double CumulativeIntegral::eval(double x) const {
    if (anti_.empty()) return 0.0;
    if (x <= lo_) return 0.0;
    if (x >= hi_) return boundary_.back();
    int k = static_cast<int>((x - lo_) / panel_width_);
    k = std::clamp(k, 0, static_cast<int>(anti_.size()) - 1);
    return boundary_[k] + anti_[k].eval(x);
}

} // namespace fbdisk

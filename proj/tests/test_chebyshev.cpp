#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbdisk/chebyshev.hpp"

#include <cmath>

using namespace fbdisk;

TEST_CASE("lobatto fit reproduces a smooth function") {
    auto s = cheb_fit(0.3, 0.2, 16, [](double x) { return std::exp(x) * std::sin(3.0 * x); });
    for (int i = 0; i <= 50; ++i) {
        const double x = 0.1 + 0.4 * i / 50.0;
        CHECK(s.eval(x) == doctest::Approx(std::exp(x) * std::sin(3.0 * x)).epsilon(1e-14));
    }
}

TEST_CASE("antiderivative starts at zero and integrates exactly") {
    auto p = cheb_fit(1.0, 0.5, 16, [](double x) { return std::cos(2.0 * x); });
    auto P = cheb_antiderivative(p);
    CHECK(P.eval(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    for (int i = 0; i <= 20; ++i) {
        const double x = 0.5 + i / 20.0;
        const double exact = 0.5 * (std::sin(2.0 * x) - std::sin(1.0));
        CHECK(P.eval(x) == doctest::Approx(exact).epsilon(1e-14));
    }
}

TEST_CASE("cumulative integral across panels") {
    CumulativeIntegral ci(-2.0, 3.0, 17, 16, [](double x) { return std::exp(-x * x); });
    // erf-based reference via high-resolution Simpson
    auto simpson = [](double a, double b, int n) {
        double acc = 0.0;
        const double h = (b - a) / n;
        for (int i = 0; i < n; ++i) {
            const double x0 = a + i * h, x2 = x0 + h, x1 = 0.5 * (x0 + x2);
            auto f = [](double x) { return std::exp(-x * x); };
            acc += (f(x0) + 4.0 * f(x1) + f(x2)) * h / 6.0;
        }
        return acc;
    };
    for (double x : {-2.0, -1.3, 0.0, 0.71, 2.9, 3.0}) {
        CHECK(ci.eval(x) == doctest::Approx(simpson(-2.0, x, 20000)).epsilon(1e-12));
    }
    CHECK(ci.total() == doctest::Approx(simpson(-2.0, 3.0, 20000)).epsilon(1e-12));
    SUBCASE("clamped outside the interval") {
        CHECK(ci.eval(-5.0) == 0.0);
        CHECK(ci.eval(10.0) == ci.total());
    }
}

TEST_CASE("flat bump integrand is handled to high accuracy") {
    // all derivatives vanish at the interval ends
    auto bump = [](double x) {
        const double tau = 1.0 - x * x;
        return tau > 0.0 ? std::exp(-0.5 / tau) : 0.0;
    };
    CumulativeIntegral coarse(-1.0, 1.0, 64, 16, bump);
    CumulativeIntegral fine(-1.0, 1.0, 256, 16, bump);
    for (int i = 0; i <= 40; ++i) {
        const double x = -1.0 + 2.0 * i / 40.0;
        CHECK(coarse.eval(x) == doctest::Approx(fine.eval(x)).epsilon(1e-13));
    }
}

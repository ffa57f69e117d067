#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbdisk/ribbon.hpp"

#include <cmath>
#include <vector>

using namespace fbdisk;

namespace {

const RibbonSpec kDefaultSpec{};  // u2 = 0.8, s = 0.5, q = 1, n = 64

// Frozen landmarks of the default ribbon, cross-checked below against an
// independent fixed-step integrator at two resolutions.
constexpr double kFrozenD = 0.45407746745754252;
constexpr double kFrozenA = 0.067024563386806513;

struct SimpsonResult {
    double d, a;
};

// Independent construction oracle: composite Simpson on the raw definitions,
// no Chebyshev machinery. Nested cumulative integration of theta, then of
// (cos theta, sin theta).
SimpsonResult simpson_landmarks(const RibbonSpec& spec, int n) {
    const double u2 = spec.u2;
    auto bump = [&](double u) {
        const double r = u / u2, tau = 1.0 - r * r;
        return tau > 0.0 ? std::exp(-spec.s / std::pow(tau, spec.q)) : 0.0;
    };
    // cumulative of bump on [0, u2] at n+1 nodes (n even)
    std::vector<double> cumb(n + 1, 0.0);
    const double h = u2 / n;
    for (int i = 0; i + 2 <= n; i += 2)
        cumb[i + 2] = cumb[i] + (bump(i * h) + 4.0 * bump((i + 1) * h) + bump((i + 2) * h)) * h / 3.0;
    for (int i = 1; i <= n; i += 2)
        cumb[i] = cumb[i - 1] + (bump((i - 1) * h) + 4.0 * bump((i - 0.5) * h) + bump(i * h)) * h / 6.0;
    const double half_mass = cumb[n];
    const double A = 0.75 * M_PI / half_mass;  // total turning 3pi/2 over both halves
    auto theta = [&](int i) { return 0.75 * M_PI + A * cumb[i]; };
    double C = 0.0, S = 0.0;
    for (int i = 0; i + 2 <= n; i += 2) {
        C += (std::cos(theta(i)) + 4.0 * std::cos(theta(i + 1)) + std::cos(theta(i + 2))) * h / 3.0;
        S += (std::sin(theta(i)) + 4.0 * std::sin(theta(i + 1)) + std::sin(theta(i + 2))) * h / 3.0;
    }
    return {-C, -C + S};
}

} // namespace

TEST_CASE("default ribbon landmarks against the independent oracle") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    const auto coarse = simpson_landmarks(kDefaultSpec, 4000);
    const auto fine = simpson_landmarks(kDefaultSpec, 8000);
    // the oracle agrees with itself at double resolution
    CHECK(std::abs(coarse.d - fine.d) <= 1e-9);
    CHECK(std::abs(coarse.a - fine.a) <= 1e-9);
    // and with the construction
    CHECK(std::abs(rib.d() - fine.d) <= 1e-9);
    CHECK(std::abs(rib.a() - fine.a) <= 1e-9);
    // frozen values
    CHECK(rib.d() == doctest::Approx(kFrozenD).epsilon(1e-12));
    CHECK(rib.a() == doctest::Approx(kFrozenA).epsilon(1e-12));
    CHECK(rib.u3() == doctest::Approx(kDefaultSpec.u2 + 1.0 + rib.a()).epsilon(1e-15));
    CHECK(rib.u1() == doctest::Approx(kDefaultSpec.u2 / 10.0));
}

TEST_CASE("total turning is 3pi/2") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    CHECK(std::abs(rib.turning() - 1.5 * M_PI) <= 1e-10);
    CHECK(std::abs(rib.theta(rib.u2()) - rib.theta(-rib.u2()) - 1.5 * M_PI) <= 1e-10);
}

TEST_CASE("segment endpoints are pinned exactly") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    const Vec2 end = rib.gamma(rib.u3());
    CHECK(end.x == 0.0);
    CHECK(end.y == -1.0);
    const Vec2 start = rib.gamma(-rib.u3());
    CHECK(start.x == -1.0);
    CHECK(start.y == 0.0);
    // arc endpoint continuity: gamma(u2) = (0, a) by construction
    const Vec2 top = rib.gamma(rib.u2());
    CHECK(top.x == 0.0);
    CHECK(top.y == rib.a());
}

TEST_CASE("eval_gamma tangents") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    const Vec2 t2 = eval_gamma(rib, rib.u2(), 1);
    CHECK(std::abs(t2.x - 0.0) <= 1e-13);
    CHECK(std::abs(t2.y - (-1.0)) <= 1e-13);
    const Vec2 t0 = eval_gamma(rib, 0.0, 1);
    CHECK(t0.x == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-12));
    CHECK(t0.y == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(eval_gamma(rib, rib.u3() + 0.1, 0), std::domain_error);
    CHECK_THROWS_AS(eval_gamma(rib, 0.0, 3), std::invalid_argument);
}

TEST_CASE("unit speed via Richardson-extrapolated differences") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    const double h = 1e-4;
    for (int i = 0; i <= 40; ++i) {
        const double u = -rib.u3() * 0.999 + 2.0 * 0.999 * rib.u3() * i / 40.0;
        auto cd = [&](double step) {
            return (1.0 / (2.0 * step)) * (rib.gamma(u + step) - rib.gamma(u - step));
        };
        const Vec2 d1 = cd(h), d2 = cd(h / 2.0);
        const Vec2 rich = (1.0 / 3.0) * (4.0 * d2 - d1);
        CHECK(std::abs(norm(rich) - 1.0) <= 1e-10);
    }
}

TEST_CASE("derivative evaluators converge as O(h^2)") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    auto err_at = [&](double h) {
        double worst1 = 0.0, worst2 = 0.0;
        for (int i = 1; i < 24; ++i) {
            const double u = -rib.u2() * 0.9 + 1.8 * rib.u2() * i / 24.0;
            const Vec2 cd1 = (1.0 / (2.0 * h)) * (rib.gamma(u + h) - rib.gamma(u - h));
            const Vec2 cd2 =
                (1.0 / (h * h)) * (rib.gamma(u + h) - 2.0 * rib.gamma(u) + rib.gamma(u - h));
            worst1 = std::max(worst1, norm(cd1 - rib.gamma_d1(u)));
            worst2 = std::max(worst2, norm(cd2 - rib.gamma_d2(u)));
        }
        return std::pair{worst1, worst2};
    };
    const auto [e1a, e2a] = err_at(1e-4);
    const auto [e1b, e2b] = err_at(1e-5);
    CHECK(e1a / e1b == doctest::Approx(100.0).epsilon(0.4));
    CHECK(e1b <= 1e-8);
    CHECK(e2b <= 1e-4);  // second differences hit the roundoff floor sooner
}

TEST_CASE("symmetry swap(gamma(u)) = gamma(-u)") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double u = -rib.u3() + 2.0 * rib.u3() * i / 1000.0;
        worst = std::max(worst, norm(swap_xy(rib.gamma(u)) - rib.gamma(-u)));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("curvature profile") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    CHECK(kappa_of(rib, rib.u2()) == 0.0);
    CHECK(kappa_of(rib, rib.u2() - 1e-4) == 0.0);  // underflows: flat to all orders
    CHECK(kappa_of(rib, rib.u2() * 0.5) > 0.1);
    // even in u
    for (double u : {0.1, 0.33, 0.62, 0.79}) {
        CHECK(kappa_of(rib, u) == doctest::Approx(kappa_of(rib, -u)).epsilon(1e-15));
    }
    // strictly decreasing past u1 (inset from the flat junction)
    double prev = kappa_of(rib, rib.u1());
    for (int i = 1; i <= 200; ++i) {
        const double u = rib.u1() + (rib.u2() * 0.95 - rib.u1()) * i / 200.0;
        const double k = kappa_of(rib, u);
        CHECK(k < prev);
        prev = k;
    }
}

TEST_CASE("containment and linear independence of the arc") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    for (int i = 0; i <= 500; ++i) {
        const double u = -rib.u2() * 0.95 + 1.9 * rib.u2() * i / 500.0;
        const Vec2 g = rib.gamma(u);
        CHECK(g.x > 0.0);
        CHECK(g.y > 0.0);
        CHECK(norm(g) < 1.0);
        CHECK(cross(g, rib.gamma_d1(u)) > 1e-10);
    }
    // det at u = 0 is d * sqrt(2)
    CHECK(cross(rib.gamma(0.0), rib.gamma_d1(0.0)) ==
          doctest::Approx(rib.d() * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("scaling") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    SUBCASE("t = 1 reproduces the base trace") {
        ScaledRibbon sr(rib, 1.0);
        CHECK(sr.u3() == doctest::Approx(rib.u3()).epsilon(1e-15));
        for (double u : {-1.5, -0.6, 0.0, 0.77, 1.2, rib.u3()}) {
            CHECK(norm(sr.gamma(u) - rib.gamma(u)) <= 1e-15);
        }
    }
    SUBCASE("homothety of the arc") {
        const double t = 0.75;
        ScaledRibbon sr = scale(rib, t);
        const Vec2 g0 = sr.gamma(0.0);
        CHECK(g0.x == doctest::Approx(t * rib.d()).epsilon(1e-15));
        CHECK(g0.y == doctest::Approx(t * rib.d()).epsilon(1e-15));
        // arc endpoint of the scaled convex part
        const Vec2 top = sr.gamma(sr.u2());
        CHECK(top.x == 0.0);
        CHECK(top.y == doctest::Approx(t * rib.a()).epsilon(1e-15));
        // segments reach the unit circle
        const Vec2 low = sr.gamma(sr.u3());
        CHECK(low.x == 0.0);
        CHECK(low.y == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(sr.u3() == doctest::Approx(sr.u2() + (1.0 + t * rib.a()) / t).epsilon(1e-15));
        // constant speed t everywhere
        for (double u : {-sr.u3() * 0.99, -0.79, 0.3, 0.81, sr.u3() * 0.5}) {
            CHECK(norm(sr.gamma_d1(u)) == doctest::Approx(t).epsilon(1e-13));
        }
        // |gamma_t| < t on the arc
        for (int i = 1; i < 100; ++i) {
            const double u = -sr.u2() + 2.0 * sr.u2() * i / 100.0;
            CHECK(norm(sr.gamma(u)) < t);
        }
    }
    SUBCASE("curvature scales as 1/t") {
        ScaledRibbon half = scale(rib, 0.5);
        CHECK(kappa_of(half, 0.0) == doctest::Approx(2.0 * kappa_of(rib, 0.0)).epsilon(1e-14));
        CHECK(kappa_of(half, half.u2()) == 0.0);
        CHECK(kappa_of(half, half.u2() + 0.5) == 0.0);
    }
    SUBCASE("bad t") {
        CHECK_THROWS_AS(scale(rib, 0.0), std::domain_error);
        CHECK_THROWS_AS(scale(rib, 1.5), std::domain_error);
    }
}

TEST_CASE("spec invariants are enforced") {
    RibbonSpec bad = kDefaultSpec;
    bad.u2 = -1.0;
    CHECK_THROWS_AS((void)build_ribbon(bad), std::invalid_argument);
    bad = kDefaultSpec;
    bad.s = 0.0;
    CHECK_THROWS_AS((void)build_ribbon(bad), std::invalid_argument);
    bad = kDefaultSpec;
    bad.q = 0.5;
    CHECK_THROWS_AS((void)build_ribbon(bad), std::invalid_argument);
    bad = kDefaultSpec;
    bad.quadrature_n = 32;
    CHECK_THROWS_AS((void)build_ribbon(bad), std::invalid_argument);
}

TEST_CASE("invalid profiles are rejected with the violated property") {
    SUBCASE("sharp profile drives the arc endpoint below the axis") {
        RibbonSpec sharp = kDefaultSpec;
        sharp.s = 1.0;
        auto res = build_ribbon(sharp);
        auto* fail = std::get_if<ValidationFailure>(&res);
        REQUIRE(fail != nullptr);
        CHECK(fail->property == "a-range");
        CHECK(fail->residual == doctest::Approx(-0.037528413).epsilon(1e-6));
    }
    SUBCASE("long arc exits the unit disk") {
        RibbonSpec big = kDefaultSpec;
        big.u2 = 1.6;
        auto res = build_ribbon(big);
        auto* fail = std::get_if<ValidationFailure>(&res);
        REQUIRE(fail != nullptr);
        CHECK(fail->property == "containment");
    }
    SUBCASE("build_ribbon_or_throw wraps the failure") {
        RibbonSpec sharp = kDefaultSpec;
        sharp.s = 1.0;
        CHECK_THROWS_AS((void)build_ribbon_or_throw(sharp), std::runtime_error);
    }
}

TEST_CASE("embeddedness margin of the arc") {
    auto rib = build_ribbon_or_throw(kDefaultSpec);
    const int n = 400;
    const double delta = 2.0 * rib.u2() / 100.0;
    std::vector<Vec2> pts(n + 1);
    for (int i = 0; i <= n; ++i) pts[i] = rib.gamma(-rib.u2() + 2.0 * rib.u2() * i / n);
    const double step = 2.0 * rib.u2() / n;
    const int skip = static_cast<int>(std::ceil(delta / step));
    double closest = 1e9;
    for (int i = 0; i <= n; ++i)
        for (int j = i + skip; j <= n; ++j) closest = std::min(closest, norm(pts[i] - pts[j]));
    CHECK(closest > 0.5 * delta);
}

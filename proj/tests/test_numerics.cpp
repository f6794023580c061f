#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "moglib/error.hpp"
#include "moglib/optimize.hpp"
#include "moglib/quadrature.hpp"
#include "moglib/rng.hpp"
#include "moglib/special.hpp"

using namespace moglib;

TEST_CASE("quadrature: analytic battery with error bounds") {
    struct Case {
        Integrand1D f;
        double lo, hi;
        double exact;
    };
    const std::vector<Case> battery = {
        {[](double x) { return std::exp(-x); }, 0.0, 30.0, 1.0 - std::exp(-30.0)},
        {[](double x) { return x * x; }, 0.0, 1.0, 1.0 / 3.0},
        {[](double x) { return std::sin(x); }, 0.0, M_PI, 2.0},
        {[](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 2.0},
        {[](double x) { return std::log(x); }, 0.0, 1.0, -1.0},
        {[](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, M_PI / 4.0},
        {[](double x) { return std::exp(-x * x); }, 0.0, 10.0, std::sqrt(M_PI) / 2.0},
        {[](double x) { return std::cos(10.0 * x); }, 0.0, 1.0, std::sin(10.0) / 10.0},
        {[](double x) { return std::pow(x, 2.5); }, 0.0, 2.0, std::pow(2.0, 3.5) / 3.5},
        {[](double x) { return x * std::exp(-x); }, 0.0, 40.0, 1.0 - 41.0 * std::exp(-40.0)},
    };
    for (const auto& c : battery) {
        const QuadResult r = quad_finite(c.f, c.lo, c.hi);
        CHECK(r.converged);
        CHECK(std::fabs(r.value - c.exact) <= std::max(r.error, 1e-12));
    }
}

TEST_CASE("quadrature: semi-infinite integrals") {
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_semi_infinite([](double x) { return x * std::exp(-x); }) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("quadrature: budget exhaustion throws with best estimate") {
    QuadConfig cfg;
    cfg.max_subdivisions = 2;
    cfg.rel_tol = 1e-14;
    cfg.abs_tol = 1e-16;
    CHECK_THROWS_AS(integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg),
                    quadrature_error);
}

TEST_CASE("upper incomplete gamma") {
    CHECK(upper_incomplete_gamma(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(upper_incomplete_gamma(5.0, 0.0) == doctest::Approx(24.0).epsilon(1e-12));
    // frozen quadrature oracle: int_1^inf t^{-1/2} e^{-t} dt
    CHECK(upper_incomplete_gamma(0.5, 1.0) ==
          doctest::Approx(0.27880558528066198).epsilon(1e-12));
    const double direct = integrate_tail(
        [](double t) { return std::pow(t, 2.3 - 1.0) * std::exp(-t); }, 0.7);
    CHECK(upper_incomplete_gamma(2.3, 0.7) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("chi-square survival") {
    CHECK(chi_square_sf(10.466, 2) == doctest::Approx(0.00533748879354298).epsilon(1e-9));
    CHECK(chi_square_sf(24.824, 3) == doctest::Approx(1.680565847501498e-5).epsilon(1e-9));
    CHECK(chi_square_sf(0.0, 7) == doctest::Approx(1.0));
    // monotone decreasing in x, increasing in df
    double prev = 1.0;
    for (double x = 0.5; x < 20.0; x += 0.5) {
        const double v = chi_square_sf(x, 3);
        CHECK(v < prev);
        prev = v;
    }
    for (int df = 1; df < 10; ++df)
        CHECK(chi_square_sf(5.0, df) < chi_square_sf(5.0, df + 1));
}

TEST_CASE("simplex: quadratic bowl") {
    const std::vector<double> c = {1.5, -2.0, 0.25};
    const auto r = simplex_minimize(
        [&](const std::vector<double>& x) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - c[i]) * (x[i] - c[i]);
            return s;
        },
        {0.0, 0.0, 0.0});
    CHECK(r.converged);
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(r.x[i] == doctest::Approx(c[i]).epsilon(1e-6));
}

TEST_CASE("simplex: Rosenbrock") {
    const auto r = simplex_minimize(
        [](const std::vector<double>& x) {
            const double a = 1.0 - x[0];
            const double b = x[1] - x[0] * x[0];
            return a * a + 100.0 * b * b;
        },
        {-1.2, 1.0});
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("simplex: infeasible half-space sentinel") {
    const double inf = std::numeric_limits<double>::infinity();
    const auto r = simplex_minimize(
        [&](const std::vector<double>& x) {
            if (x[0] <= 0.0) return inf;
            return (x[0] - 2.0) * (x[0] - 2.0) + x[1] * x[1];
        },
        {0.5, 3.0});
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("golden section: interior, boundary and sentinel minima") {
    const double x1 = golden_minimize([](double x) { return (x - 1.3) * (x - 1.3); },
                                      -4.0, 4.0, 1e-12);
    CHECK(x1 == doctest::Approx(1.3).epsilon(1e-9));

    // non-quadratic interior minimum: x - log x on (0, inf) at x = 1
    const double x2 =
        golden_minimize([](double x) { return x - std::log(x); }, 0.01, 10.0, 1e-12);
    CHECK(x2 == doctest::Approx(1.0).epsilon(1e-6));

    // monotone objective: the search collapses onto the boundary
    const double x3 = golden_minimize([](double x) { return x; }, 2.0, 5.0, 1e-10);
    CHECK(x3 == doctest::Approx(2.0).epsilon(1e-9));

    // +inf sentinel on part of the bracket
    const double inf = std::numeric_limits<double>::infinity();
    const double x4 = golden_minimize(
        [&](double x) { return x <= 0.0 ? inf : (x - 0.5) * (x - 0.5); }, -1.0, 3.0,
        1e-12);
    CHECK(x4 == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(golden_minimize([](double x) { return x; }, 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("fd_gradient") {
    auto g1 = fd_gradient(
        [](const std::vector<double>& x) { return x[0] * x[0] + x[1] * x[1]; }, {1.0, 2.0});
    CHECK(g1[0] == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(g1[1] == doctest::Approx(4.0).epsilon(1e-8));
    auto g2 = fd_gradient(
        [](const std::vector<double>& x) { return std::exp(x[0]) * x[1]; }, {0.0, 1.0});
    CHECK(g2[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(g2[1] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("random stream: replay and independence basics") {
    RandomStream a(42, 7);
    RandomStream b(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    RandomStream c(42, 8);
    int same = 0;
    RandomStream a2(42, 7);
    for (int i = 0; i < 1000; ++i)
        if (a2.next_u64() == c.next_u64()) ++same;
    CHECK(same == 0);
}

TEST_CASE("random stream: uniforms in (0,1), lag-1 autocorrelation near 0") {
    RandomStream rng(123, 0);
    const int n = 1000000;
    double prev = rng.next_uniform();
    double sum = prev, sum2 = prev * prev, cross = 0.0;
    double mn = prev, mx = prev;
    for (int i = 1; i < n; ++i) {
        const double u = rng.next_uniform();
        sum += u;
        sum2 += u * u;
        cross += prev * u;
        mn = std::min(mn, u);
        mx = std::max(mx, u);
        prev = u;
    }
    CHECK(mn > 0.0);
    CHECK(mx < 1.0);
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    const double rho = (cross / (n - 1) - mean * mean) / var;
    // 3 sigma ~ 3/sqrt(n)
    CHECK(std::fabs(rho) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
}

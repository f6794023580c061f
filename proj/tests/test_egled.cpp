#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "moglib/egled.hpp"
#include "moglib/error.hpp"
#include "moglib/quadrature.hpp"
#include "moglib/rng.hpp"

using namespace moglib;

namespace {

// Randomized valid parameter draws covering alpha<1, alpha>1, b=0, a=0.
std::vector<EgledParams> random_params(std::size_t count, std::uint64_t seed) {
    RandomStream rng(seed, 1);
    std::vector<EgledParams> out;
    auto range = [&](double lo, double hi) {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * rng.next_uniform());
    };
    out.emplace_back(0.5, 1.0, 0.0, 1.0);   // alpha < 1, pure linear
    out.emplace_back(2.5, 0.0, 1.0, 0.7);   // alpha > 1, pure quadratic
    out.emplace_back(1.0, 0.3, 0.4, 2.0);
    while (out.size() < count)
        out.emplace_back(range(0.3, 3.0), range(0.05, 3.0), range(0.05, 3.0),
                         range(0.3, 3.0));
    return out;
}

}  // namespace

TEST_CASE("eta basics") {
    CHECK(eta(EgledParams(1, 1, 0, 1), 2.0) == doctest::Approx(2.0));
    CHECK(eta(EgledParams(1, 0, 2, 1), 3.0) == doctest::Approx(9.0));
    CHECK(eta(EgledParams(1, 1, 2, 1), 1.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(eta(EgledParams(1, 1, 0, 1), -0.1), std::domain_error);
    // strictly increasing on x > 0
    const EgledParams p(1.3, 0.4, 0.9, 1.0);
    double prev = 0.0;
    for (double x = 0.1; x < 5.0; x += 0.1) {
        CHECK(eta(p, x) > prev);
        prev = eta(p, x);
    }
}

TEST_CASE("parameter invariants") {
    CHECK_THROWS_AS(EgledParams(0.0, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(EgledParams(1, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(EgledParams(1, -1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(EgledParams(1, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(EgledParams(std::nan(""), 1, 0, 1), std::invalid_argument);
}

TEST_CASE("cdf: anchors") {
    const EgledParams expo(1, 1, 0, 1);
    CHECK(egled_cdf(expo, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(egled_cdf(expo, 0.0) == 0.0);
    CHECK(egled_cdf(EgledParams(1.3, 0.4, 0.9, 2.0), 0.0) == 0.0);
    // frozen arbitrary-precision value of the closed form (eta=2, eta^alpha=4)
    CHECK(egled_cdf(EgledParams(2, 1, 2, 2), 1.0) ==
          doctest::Approx(0.96370418485043415).epsilon(1e-14));
}

TEST_CASE("cdf: monotone, limits") {
    for (const auto& p : random_params(10, 11)) {
        double prev = 0.0;
        for (double q = 0.05; q < 1.0; q += 0.05) {
            const double x = egled_quantile(p, q);
            const double f = egled_cdf(p, x);
            CHECK(f >= prev);
            prev = f;
        }
        CHECK(egled_cdf(p, egled_quantile(p, 1.0 - 1e-9)) ==
              doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("pdf: exponential anchor and normalization") {
    CHECK(egled_pdf(EgledParams(1, 1, 0, 1), 0.5) ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(egled_pdf(EgledParams(1, 1, 0, 1), 0.0), std::domain_error);

    for (const auto& p : random_params(20, 17)) {
        const double mass = integrate_semi_infinite(
            [&](double x) { return egled_pdf(p, x); }, QuadConfig{1e-10, 1e-14, 4000});
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    }
    // fitted X1 marginal from the UEFA analysis
    const EgledParams x1fit(1.897, 0.0022, 0.0006, 0.492);
    CHECK(integrate_semi_infinite([&](double x) { return egled_pdf(x1fit, x); }) ==
          doctest::Approx(1.0).epsilon(1e-7));
    CHECK(egled_cdf(x1fit, egled_quantile(x1fit, 1.0 - 1e-9)) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("pdf matches central difference of cdf") {
    for (const auto& p : random_params(8, 23)) {
        for (double q : {0.2, 0.5, 0.8}) {
            const double x = egled_quantile(p, q);
            const double h = 1e-6 * std::max(1.0, x);
            const double fd = (egled_cdf(p, x + h) - egled_cdf(p, x - h)) / (2.0 * h);
            CHECK(egled_pdf(p, x) == doctest::Approx(fd).epsilon(1e-5));
        }
    }
}

TEST_CASE("quantile: anchors and round trips") {
    CHECK(egled_quantile(EgledParams(1, 1, 0, 1), 0.5) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(egled_quantile(EgledParams(1, 1, 0, 1), 0.0), std::domain_error);
    CHECK_THROWS_AS(egled_quantile(EgledParams(1, 1, 0, 1), 1.0), std::domain_error);

    // b > 0 median pin (frozen forward evaluation)
    const EgledParams pb(1.5, 0.5, 0.7, 2.1);
    const double med = egled_quantile(pb, 0.5);
    CHECK(med == doctest::Approx(1.2501603707962735).epsilon(1e-12));
    CHECK(egled_cdf(pb, med) == doctest::Approx(0.5).epsilon(1e-12));

    for (const auto& p : random_params(12, 31)) {
        for (double q : {0.01, 0.1, 0.5, 0.9, 0.999}) {
            const double x = egled_quantile(p, q);
            CHECK(egled_cdf(p, x) == doctest::Approx(q).epsilon(1e-10));
            CHECK(egled_quantile(p, egled_cdf(p, x)) ==
                  doctest::Approx(x).epsilon(1e-10));
        }
    }
}

TEST_CASE("sampling: determinism, KS distance, exponential mean") {
    const EgledParams p(1.6, 0.4, 0.8, 1.3);
    RandomStream r1(99, 5), r2(99, 5);
    const auto s1 = sample_egled(p, 100, r1);
    const auto s2 = sample_egled(p, 100, r2);
    CHECK(s1 == s2);

    const std::size_t n = 100000;
    RandomStream rng(7, 0);
    auto xs = sample_egled(p, n, rng);
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = egled_cdf(p, xs[i]);
        ks = std::max(ks, std::fabs(f - (i + 1.0) / n));
        ks = std::max(ks, std::fabs(f - static_cast<double>(i) / n));
    }
    CHECK(ks < 0.01);

    RandomStream rng2(8, 0);
    const auto es = sample_egled(EgledParams(1, 1, 0, 1), n, rng2);
    double mean = 0.0;
    for (double x : es) mean += x;
    mean /= static_cast<double>(n);
    CHECK(mean == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("hazard and reversed hazard") {
    const EgledParams expo(1, 1, 0, 1);
    for (double x : {0.2, 1.0, 4.0})
        CHECK(egled_hazard(expo, x) == doctest::Approx(1.0).epsilon(1e-10));

    for (const auto& p : random_params(8, 41)) {
        for (double q : {0.1, 0.5, 0.9}) {
            const double x = egled_quantile(p, q);
            CHECK(egled_reversed_hazard(p, x) * egled_cdf(p, x) ==
                  doctest::Approx(egled_pdf(p, x)).epsilon(1e-12));
            CHECK(egled_hazard(p, x) * (1.0 - egled_cdf(p, x)) ==
                  doctest::Approx(egled_pdf(p, x)).epsilon(1e-12));
        }
    }

    // fitted X2 marginal: finite positive hazard on (0, 120)
    const EgledParams x2fit(1.705, 0.0172, 2e-4, 0.622);
    for (double x = 1.0; x < 120.0; x += 7.0) {
        const double h = egled_hazard(x2fit, x);
        CHECK(std::isfinite(h));
        CHECK(h > 0.0);
    }

    // saturated survival signals instead of dividing by zero
    CHECK_THROWS_AS(egled_hazard(expo, 1e4), saturated_survival_error);
}

TEST_CASE("moments") {
    const EgledParams expo(1, 1, 0, 1);
    CHECK(egled_moment(expo, 1) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(egled_moment(expo, 2) == doctest::Approx(2.0).epsilon(1e-8));

    const EgledParams p(1.4, 0.6, 0.5, 1.8);
    const std::size_t n = 1000000;
    RandomStream rng(2024, 3);
    const auto xs = sample_egled(p, n, rng);
    double mean = 0.0, m2 = 0.0;
    for (double x : xs) {
        mean += x;
        m2 += x * x;
    }
    mean /= static_cast<double>(n);
    m2 /= static_cast<double>(n);
    const double se = std::sqrt((m2 - mean * mean) / static_cast<double>(n));
    CHECK(std::fabs(egled_moment(p, 1) - mean) < 3.0 * se);
}

TEST_CASE("mean waiting time") {
    const EgledParams expo(1, 1, 0, 1);
    // closed form (t - (1 - e^{-t})) / (1 - e^{-t}) at t = 1
    CHECK(egled_mean_waiting_time(expo, 1.0) ==
          doctest::Approx(0.58197670686932642).epsilon(1e-9));

    for (const auto& p : random_params(6, 53)) {
        for (double q : {0.3, 0.7}) {
            const double t = egled_quantile(p, q);
            const double mwt = egled_mean_waiting_time(p, t);
            CHECK(mwt < t);
            CHECK(mwt > 0.0);
            // Richardson-refined trapezoid oracle
            auto trap = [&](int m) {
                const double h = t / m;
                double s = 0.5 * egled_cdf(p, t);
                for (int i = 1; i < m; ++i) s += egled_cdf(p, i * h);
                return s * h;
            };
            const double t1 = trap(2000), t2 = trap(4000);
            const double oracle = (4.0 * t2 - t1) / 3.0 / egled_cdf(p, t);
            CHECK(mwt == doctest::Approx(oracle).epsilon(1e-6));
        }
    }
}

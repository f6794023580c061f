#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "moglib/begled.hpp"
#include "moglib/quadrature.hpp"
#include "moglib/rng.hpp"

using namespace moglib;

namespace {

const BegledParams kTable9(1.5, 0.5, 0.7, 0.8, 1.2, 1.3);

std::vector<BegledParams> random_params(std::size_t count, std::uint64_t seed) {
    RandomStream rng(seed, 2);
    std::vector<BegledParams> out;
    auto range = [&](double lo, double hi) {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * rng.next_uniform());
    };
    while (out.size() < count)
        out.emplace_back(range(0.4, 2.5), range(0.1, 2.0), range(0.1, 2.0),
                         range(0.3, 2.5), range(0.3, 2.5), range(0.3, 2.5));
    return out;
}

double total_mass(const BegledParams& p, double tol) {
    QuadConfig cfg;
    cfg.rel_tol = 0.1 * tol;
    cfg.abs_tol = 1e-12;
    const double below = quad_below_diagonal(
        [&](double x1, double x2) { return joint_pdf(p, {x1, x2}, Region::Below); },
        cfg).value;
    const double above = quad_below_diagonal(
        [&](double x2, double x1) { return joint_pdf(p, {x1, x2}, Region::Above); },
        cfg).value;
    const double diag = integrate_semi_infinite(
        [&](double x) { return joint_pdf(p, {x, x}, Region::Diagonal); }, cfg);
    return below + above + diag;
}

}  // namespace

TEST_CASE("joint cdf: diagonal and independence anchors") {
    for (double x : {0.3, 1.0, 2.5}) {
        const double f = joint_cdf(kTable9, {x, x});
        const double expect =
            egled_cdf(kTable9.max_law(), x);  // shape theta1+theta2+theta3 on the diagonal
        CHECK(f == doctest::Approx(expect).epsilon(1e-13));
    }
    // theta3 -> 0 limit factorizes
    const BegledParams indep(1.4, 0.5, 0.6, 0.9, 1.1, 1e-12);
    const BivariatePoint pt{0.6, 1.2};
    CHECK(joint_cdf(indep, pt) ==
          doctest::Approx(marginal_cdf(indep, 1, pt.x1) * marginal_cdf(indep, 2, pt.x2))
              .epsilon(1e-9));
    // frozen arbitrary-precision evaluation at Table-9-style parameters
    CHECK(joint_cdf(kTable9, {0.5, 1.0}) ==
          doctest::Approx(0.012827184809117611).epsilon(1e-13));
    CHECK(joint_cdf(kTable9, {0.0, 1.0}) == 0.0);
}

TEST_CASE("joint cdf: 2-increasing rectangle inequality") {
    RandomStream rng(5, 9);
    for (const auto& p : random_params(5, 77)) {
        for (int rep = 0; rep < 20; ++rep) {
            const double a1 = 3.0 * rng.next_uniform();
            const double b1 = a1 + 3.0 * rng.next_uniform();
            const double a2 = 3.0 * rng.next_uniform();
            const double b2 = a2 + 3.0 * rng.next_uniform();
            const double mass = joint_cdf(p, {b1, b2}) - joint_cdf(p, {a1, b2}) -
                                joint_cdf(p, {b1, a2}) + joint_cdf(p, {a1, a2});
            CHECK(mass >= -1e-12);
        }
    }
}

TEST_CASE("joint cdf: symmetry under swapping components") {
    const BegledParams p(1.3, 0.4, 0.9, 0.7, 1.9, 1.1);
    const BegledParams swapped(1.3, 0.4, 0.9, 1.9, 0.7, 1.1);
    CHECK(joint_cdf(p, {0.8, 1.7}) == doctest::Approx(joint_cdf(swapped, {1.7, 0.8})));
    CHECK(joint_pdf(p, {0.8, 1.7}, Region::Below) ==
          doctest::Approx(joint_pdf(swapped, {1.7, 0.8}, Region::Above)));
}

TEST_CASE("joint pdf: region consistency is enforced") {
    CHECK_THROWS_AS(joint_pdf(kTable9, {2.0, 1.0}, Region::Below), std::invalid_argument);
    CHECK_THROWS_AS(joint_pdf(kTable9, {1.0, 2.0}, Region::Above), std::invalid_argument);
}

TEST_CASE("joint pdf: total probability decomposition") {
    CHECK(total_mass(kTable9, 1e-6) == doctest::Approx(1.0).epsilon(1e-6));
    for (const auto& p : random_params(4, 101))
        CHECK(total_mass(p, 1e-6) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("joint pdf: diagonal mass equals theta3 / theta sum") {
    for (const auto& p : random_params(6, 103)) {
        const double diag = integrate_semi_infinite(
            [&](double x) { return joint_pdf(p, {x, x}, Region::Diagonal); },
            QuadConfig{1e-10, 1e-14, 4000});
        CHECK(diag == doctest::Approx(tie_probability(p)).epsilon(1e-8));
    }
}

TEST_CASE("joint pdf: mixed partial of the cdf off the diagonal") {
    for (const auto& p : random_params(5, 107)) {
        const BivariatePoint pts[] = {{0.5, 1.4}, {1.9, 0.6}};
        for (const auto& pt : pts) {
            const double h1 = 1e-4 * std::max(1.0, pt.x1);
            const double h2 = 1e-4 * std::max(1.0, pt.x2);
            const double fd =
                (joint_cdf(p, {pt.x1 + h1, pt.x2 + h2}) -
                 joint_cdf(p, {pt.x1 - h1, pt.x2 + h2}) -
                 joint_cdf(p, {pt.x1 + h1, pt.x2 - h2}) +
                 joint_cdf(p, {pt.x1 - h1, pt.x2 - h2})) /
                (4.0 * h1 * h2);
            const Region region = pt.x1 < pt.x2 ? Region::Below : Region::Above;
            CHECK(joint_pdf(p, pt, region) == doctest::Approx(fd).epsilon(1e-5));
        }
    }
}

TEST_CASE("marginals: delegation and sampling agreement") {
    const double q = egled_quantile(kTable9.marginal(1), 1.0 - 1e-10);
    CHECK(marginal_cdf(kTable9, 1, 0.8) ==
          doctest::Approx(joint_cdf(kTable9, {0.8, q})).epsilon(1e-9));
    CHECK_THROWS_AS(marginal_cdf(kTable9, 3, 1.0), std::domain_error);

    const BegledParams small3(1.5, 0.5, 0.7, 0.8, 1.2, 1e-12);
    CHECK(marginal_cdf(small3, 1, 1.0) ==
          doctest::Approx(egled_cdf(EgledParams(1.5, 0.5, 0.7, 0.8), 1.0)).epsilon(1e-9));

    const std::size_t n = 100000;
    RandomStream rng(31, 0);
    auto pairs = sample_begled(kTable9, n, rng);
    for (int k : {1, 2}) {
        std::vector<double> xs;
        xs.reserve(n);
        for (const auto& pt : pairs) xs.push_back(k == 1 ? pt.x1 : pt.x2);
        std::sort(xs.begin(), xs.end());
        double ks = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double f = marginal_cdf(kTable9, k, xs[i]);
            ks = std::max(ks, std::fabs(f - (i + 1.0) / n));
            ks = std::max(ks, std::fabs(f - static_cast<double>(i) / n));
        }
        CHECK(ks < 0.01);
    }
}

TEST_CASE("conditional law: total mass is one") {
    for (double xj : {0.4, 1.0, 2.2}) {
        for (int i : {1, 2}) {
            const double inner = integrate_finite(
                [&](double xi) { return conditional_pdf(kTable9, i, xi, xj); }, 0.0, xj,
                QuadConfig{1e-9, 1e-13, 4000});
            const double outer = integrate_tail(
                [&](double xi) { return conditional_pdf(kTable9, i, xi, xj); }, xj,
                QuadConfig{1e-9, 1e-13, 4000});
            const double atom = conditional_diag_mass(kTable9, i, xj);
            CHECK(inner + outer + atom == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("conditional law: independence limit") {
    const BegledParams indep(1.5, 0.5, 0.7, 0.8, 1.2, 1e-12);
    CHECK(conditional_diag_mass(indep, 1, 1.0) < 1e-11);
    // below-diagonal branch tends to the plain marginal of X_i
    CHECK(conditional_pdf(indep, 1, 0.6, 1.5) ==
          doctest::Approx(marginal_pdf(indep, 1, 0.6)).epsilon(1e-6));
}

TEST_CASE("max and min laws") {
    for (double t : {0.2, 0.8, 1.7, 3.0}) {
        CHECK(min_cdf(kTable9, t) >= max_cdf(kTable9, t));
        // F1 + F2 = F_S + F_T, the min-law identity rearranged
        CHECK(marginal_cdf(kTable9, 1, t) + marginal_cdf(kTable9, 2, t) ==
              doctest::Approx(min_cdf(kTable9, t) + max_cdf(kTable9, t)).epsilon(1e-12));
    }

    const std::size_t n = 100000;
    RandomStream rng(77, 0);
    auto pairs = sample_begled(kTable9, n, rng);
    std::vector<double> maxs;
    maxs.reserve(n);
    for (const auto& pt : pairs) maxs.push_back(std::max(pt.x1, pt.x2));
    std::sort(maxs.begin(), maxs.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = max_cdf(kTable9, maxs[i]);
        ks = std::max(ks, std::fabs(f - (i + 1.0) / n));
        ks = std::max(ks, std::fabs(f - static_cast<double>(i) / n));
    }
    CHECK(ks < 0.01);
}

TEST_CASE("median correlation") {
    // equal private shocks, no shared shock: independent, so 0
    const BegledParams indep(1.2, 0.7, 0.3, 1.4, 1.4, 1e-14);
    CHECK(median_correlation(indep) == doctest::Approx(0.0).epsilon(1e-10));
    // all shapes 1: frozen 4 * 2^{-3/2} - 1
    const BegledParams ones(1.8, 0.4, 1.1, 1.0, 1.0, 1.0);
    CHECK(median_correlation(ones) == doctest::Approx(0.41421356237309505).epsilon(1e-12));
    for (const auto& p : random_params(100, 211)) {
        const double m = median_correlation(p);
        CHECK(m >= -1.0);
        CHECK(m <= 1.0);
    }
}

TEST_CASE("tie probability and sampler tie fraction") {
    CHECK(tie_probability(BegledParams(1, 1, 0, 1, 1, 1)) == doctest::Approx(1.0 / 3.0));
    const BegledParams nearly(1, 1, 0, 1, 1, 1e-12);
    CHECK(tie_probability(nearly) < 1e-12);

    const std::size_t n = 100000;
    RandomStream rng(13, 1);
    auto pairs = sample_begled(kTable9, n, rng);
    std::size_t ties = 0;
    for (const auto& pt : pairs)
        if (pt.x1 == pt.x2) ++ties;  // Marshall-Olkin ties are bit-exact
    const double pt_hat = static_cast<double>(ties) / static_cast<double>(n);
    const double p0 = tie_probability(kTable9);
    const double sigma = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(n));
    CHECK(std::fabs(pt_hat - p0) < 3.0 * sigma);
}

TEST_CASE("sampler: determinism and joint cdf agreement on a grid") {
    RandomStream r1(2025, 4), r2(2025, 4);
    auto s1 = sample_begled(kTable9, 50, r1);
    auto s2 = sample_begled(kTable9, 50, r2);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i].x1 == s2[i].x1);
        CHECK(s1[i].x2 == s2[i].x2);
    }

    const std::size_t n = 100000;
    RandomStream rng(404, 2);
    auto pairs = sample_begled(kTable9, n, rng);
    for (double q1 : {0.2, 0.35, 0.5, 0.65, 0.8}) {
        for (double q2 : {0.2, 0.35, 0.5, 0.65, 0.8}) {
            const double g1 = egled_quantile(kTable9.marginal(1), q1);
            const double g2 = egled_quantile(kTable9.marginal(2), q2);
            std::size_t hits = 0;
            for (const auto& pt : pairs)
                if (pt.x1 <= g1 && pt.x2 <= g2) ++hits;
            const double expect = joint_cdf(kTable9, {g1, g2});
            const double sigma =
                std::sqrt(expect * (1.0 - expect) / static_cast<double>(n));
            CHECK(std::fabs(static_cast<double>(hits) / n - expect) < 3.5 * sigma);
        }
    }
}

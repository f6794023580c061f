#include "moglib/reliability.hpp"

#include <cmath>
#include <stdexcept>

#include "moglib/error.hpp"
#include "moglib/special.hpp"

namespace moglib {

double stress_strength(const BegledParams& p) {
    return (p.theta2 + p.theta3) / (p.theta1 + p.theta2 + 2.0 * p.theta3);
}

double joint_reliability(const BegledParams& p, const BivariatePoint& pt) {
    if (pt.x1 < 0.0 || pt.x2 < 0.0)
        throw std::domain_error("joint_reliability: coordinates must be nonnegative");
    return 1.0 - marginal_cdf(p, 1, pt.x1) - marginal_cdf(p, 2, pt.x2) +
           joint_cdf(p, pt);
}

double joint_hazard(const BegledParams& p, const BivariatePoint& pt, Region region) {
    const double r = joint_reliability(p, pt);
    if (r <= 0.0)
        throw saturated_survival_error("joint_hazard: joint survival is zero");
    return joint_pdf(p, pt, region) / r;
}

double joint_reversed_hazard(const BegledParams& p, const BivariatePoint& pt,
                             Region region) {
    const double f = joint_cdf(p, pt);
    if (f <= 0.0)
        throw degenerate_window_error("joint_reversed_hazard: joint cdf is zero");
    return joint_pdf(p, pt, region) / f;
}

double joint_mean_waiting_time(const BegledParams& p, double t1, double t2,
                               const QuadConfig& cfg) {
    if (t1 <= 0.0 || t2 <= 0.0)
        throw std::domain_error("joint_mean_waiting_time: t1, t2 must be positive");
    const double f = joint_cdf(p, {t1, t2});
    if (f <= 0.0)
        throw degenerate_window_error("joint_mean_waiting_time: F(t1,t2) underflowed");
    const QuadResult num = quad_rectangle(
        [&](double x1, double x2) { return joint_cdf(p, {x1, x2}); }, t1, t2, cfg);
    if (!num.converged)
        throw quadrature_error("joint_mean_waiting_time: quadrature did not converge",
                               num.value, num.error);
    return num.value / f;
}

VectorHazard vector_hazard(const BegledParams& p, double x, double x1, double x2) {
    if (x <= 0.0 || x1 <= 0.0 || x2 <= 0.0)
        throw std::domain_error("vector_hazard: ages must be positive");
    const double surv_min = 1.0 - min_cdf(p, x);
    if (surv_min <= 0.0)
        throw saturated_survival_error("vector_hazard: min-law survival is zero");
    VectorHazard h;
    h.h_min = min_pdf(p, x) / surv_min;
    h.h12 = paper_form_h12(p, x1);
    h.h21 = paper_form_h21(p, x2);
    return h;
}

namespace {

double tail_mean(const Integrand1D& density, double lo, double tail_mass,
                 const QuadConfig& cfg, const char* what) {
    if (tail_mass <= 0.0) throw saturated_survival_error(what);
    const QuadResult num =
        quad_tail([&](double y) { return y * density(y); }, lo, cfg);
    if (!num.converged)
        throw quadrature_error("vector_availability: quadrature did not converge",
                               num.value, num.error);
    return num.value / tail_mass;
}

}  // namespace

VectorAvailability vector_availability(const BegledParams& p, double x, double x1,
                                       double x2, const QuadConfig& cfg) {
    if (x <= 0.0 || x1 <= 0.0 || x2 <= 0.0)
        throw std::domain_error("vector_availability: ages must be positive");
    VectorAvailability v;
    v.v_min = tail_mean([&](double y) { return min_pdf(p, y); }, x,
                        1.0 - min_cdf(p, x), cfg,
                        "vector_availability: min-law tail mass is zero");

    // v12 conditions on component 2 down at x2 and component 1 alive at x1
    // (meaningful for x1 > x2); the density slice along y > x1 is f2(y, x2).
    // Subdivision can place nodes that round onto the conditioning age, so
    // points at or below it contribute nothing.
    const Integrand1D slice12 = [&](double y) {
        return y > x2 ? joint_pdf(p, {y, x2}, Region::Above) : 0.0;
    };
    const QuadResult b12 = quad_tail(slice12, x1, cfg);
    if (!b12.converged)
        throw quadrature_error("vector_availability: v12 mass quadrature failed",
                               b12.value, b12.error);
    v.v12 = tail_mean(slice12, x1, b12.value, cfg,
                      "vector_availability: v12 tail mass is zero");

    const Integrand1D slice21 = [&](double y) {
        return y > x1 ? joint_pdf(p, {x1, y}, Region::Below) : 0.0;
    };
    const QuadResult b21 = quad_tail(slice21, x2, cfg);
    if (!b21.converged)
        throw quadrature_error("vector_availability: v21 mass quadrature failed",
                               b21.value, b21.error);
    v.v21 = tail_mean(slice21, x2, b21.value, cfg,
                      "vector_availability: v21 tail mass is zero");
    return v;
}

VectorMrl vector_mrl(const BegledParams& p, double x, double x1, double x2,
                     const QuadConfig& cfg) {
    const VectorAvailability v = vector_availability(p, x, x1, x2, cfg);
    return VectorMrl{v.v_min - x, v.v12 - x1, v.v21 - x2};
}

namespace {
double psi(const BegledParams& p, double x) {
    return -std::expm1(-cum_base(EgledParams(p.alpha, p.a, p.b, 1.0), x));
}
}  // namespace

double paper_form_min_hazard(const BegledParams& p, double x) {
    const EgledParams base(p.alpha, p.a, p.b, 1.0);
    const double e = eta(base, x);
    const double h = cum_base(base, x);
    const double ps = psi(p, x);
    const double s = p.theta_sum();
    return p.alpha * s * (p.a + p.b * x) * std::pow(e, p.alpha - 1.0) * std::exp(-h) /
           (ps * (std::pow(ps, s - 1.0) - 1.0));
}

double paper_form_h12(const BegledParams& p, double x1) {
    const double ps = std::pow(psi(p, x1), p.theta1);
    if (ps >= 1.0)
        throw saturated_survival_error("paper_form_h12: denominator vanished");
    return marginal_pdf(p, 1, x1) * std::pow(psi(p, x1), p.theta3) / (1.0 - ps);
}

double paper_form_h21(const BegledParams& p, double x2) {
    const double ps = std::pow(psi(p, x2), p.theta2);
    if (ps >= 1.0)
        throw saturated_survival_error("paper_form_h21: denominator vanished");
    return marginal_pdf(p, 2, x2) * std::pow(psi(p, x2), p.theta3) / (1.0 - ps);
}

}  // namespace moglib

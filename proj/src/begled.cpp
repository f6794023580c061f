#include "moglib/begled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "moglib/special.hpp"

namespace moglib {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// log(1 - e^{-h}) with the h -> 0 underflow limit alpha log eta supplied.
double log_psi(const BegledParams& p, double x) {
    const EgledParams base(p.alpha, p.a, p.b, 1.0);
    const double e = eta(base, x);
    if (e <= 0.0) return -kInf;
    const double h = std::exp(p.alpha * std::log(e));
    return h > 0.0 ? log1mexp(h) : p.alpha * std::log(e);
}

// Per-coordinate log factor (a+bx) eta^{alpha-1} e^{-eta^alpha} Psi^{c}.
double log_edge(const BegledParams& p, double x, double c) {
    const EgledParams base(p.alpha, p.a, p.b, 1.0);
    const double e = eta(base, x);
    if (e <= 0.0) return -kInf;
    const double log_e = std::log(e);
    const double h = std::exp(p.alpha * log_e);
    const double lp = h > 0.0 ? log1mexp(h) : p.alpha * log_e;
    return std::log(p.a + p.b * x) + (p.alpha - 1.0) * log_e - h + c * lp;
}
}  // namespace

BegledParams::BegledParams(double alpha_, double a_, double b_, double theta1_,
                           double theta2_, double theta3_)
    : alpha(alpha_), a(a_), b(b_), theta1(theta1_), theta2(theta2_), theta3(theta3_) {
    if (!(std::isfinite(alpha) && std::isfinite(a) && std::isfinite(b) &&
          std::isfinite(theta1) && std::isfinite(theta2) && std::isfinite(theta3)))
        throw std::invalid_argument("BegledParams: fields must be finite");
    if (alpha <= 0.0 || theta1 <= 0.0 || theta2 <= 0.0 || theta3 <= 0.0)
        throw std::invalid_argument("BegledParams: shapes must be positive");
    if (a < 0.0 || b < 0.0 || a + b <= 0.0)
        throw std::invalid_argument("BegledParams: need a, b >= 0 and a + b > 0");
}

EgledParams BegledParams::marginal(int k) const {
    if (k != 1 && k != 2) throw std::domain_error("BegledParams::marginal: k must be 1 or 2");
    return EgledParams(alpha, a, b, (k == 1 ? theta1 : theta2) + theta3);
}

EgledParams BegledParams::max_law() const {
    return EgledParams(alpha, a, b, theta_sum());
}

Region classify_point(double x1, double x2, double tie_tol) {
    if (x1 < x2 - tie_tol) return Region::Below;
    if (x1 > x2 + tie_tol) return Region::Above;
    return Region::Diagonal;
}

double joint_cdf(const BegledParams& p, const BivariatePoint& pt) {
    if (pt.x1 < 0.0 || pt.x2 < 0.0)
        throw std::domain_error("joint_cdf: coordinates must be nonnegative");
    if (pt.x1 == 0.0 || pt.x2 == 0.0) return 0.0;
    const double z = std::min(pt.x1, pt.x2);
    const double lf = p.theta1 * log_psi(p, pt.x1) + p.theta2 * log_psi(p, pt.x2) +
                      p.theta3 * log_psi(p, z);
    return std::exp(lf);
}

double log_joint_pdf(const BegledParams& p, const BivariatePoint& pt, Region region) {
    const double la2 = 2.0 * std::log(p.alpha);
    switch (region) {
        case Region::Below: {
            if (!(pt.x1 < pt.x2))
                throw std::invalid_argument("joint_pdf: Below region requires x1 < x2");
            return la2 + std::log(p.theta2 * (p.theta1 + p.theta3)) +
                   log_edge(p, pt.x1, p.theta1 + p.theta3 - 1.0) +
                   log_edge(p, pt.x2, p.theta2 - 1.0);
        }
        case Region::Above: {
            if (!(pt.x1 > pt.x2))
                throw std::invalid_argument("joint_pdf: Above region requires x1 > x2");
            return la2 + std::log(p.theta1 * (p.theta2 + p.theta3)) +
                   log_edge(p, pt.x1, p.theta1 - 1.0) +
                   log_edge(p, pt.x2, p.theta2 + p.theta3 - 1.0);
        }
        case Region::Diagonal: {
            const double x = 0.5 * (pt.x1 + pt.x2);
            if (!(x > 0.0))
                throw std::invalid_argument("joint_pdf: Diagonal region requires x > 0");
            return std::log(p.alpha * p.theta3) + log_edge(p, x, p.theta_sum() - 1.0);
        }
    }
    throw std::invalid_argument("joint_pdf: bad region tag");
}

double joint_pdf(const BegledParams& p, const BivariatePoint& pt, Region region) {
    const double lp = log_joint_pdf(p, pt, region);
    return std::isfinite(lp) ? std::exp(lp) : (lp > 0.0 ? kInf : 0.0);
}

double marginal_cdf(const BegledParams& p, int k, double x) {
    return egled_cdf(p.marginal(k), x);
}

double marginal_pdf(const BegledParams& p, int k, double x) {
    return egled_pdf(p.marginal(k), x);
}

double conditional_pdf(const BegledParams& p, int i, double xi, double xj) {
    if (i != 1 && i != 2) throw std::domain_error("conditional_pdf: i must be 1 or 2");
    if (xi <= 0.0 || xj <= 0.0)
        throw std::domain_error("conditional_pdf: coordinates must be positive");
    const double ti = i == 1 ? p.theta1 : p.theta2;
    const double tj = i == 1 ? p.theta2 : p.theta1;
    if (xi > xj) {
        // f^(1): the EGLED(theta_i) density of the private shock alone.
        return egled_pdf(EgledParams(p.alpha, p.a, p.b, ti), xi);
    }
    if (xi < xj) {
        // f^(2): alpha theta_j (theta_i+theta_3) (a+b xi) eta^{alpha-1} e^{-eta^alpha}
        //        Psi(xi)^{theta_i+theta_3-1} / ((theta_j+theta_3) Psi(xj)^{theta_3}).
        const double lf = std::log(p.alpha * tj * (ti + p.theta3) / (tj + p.theta3)) +
                          log_edge(p, xi, ti + p.theta3 - 1.0) -
                          p.theta3 * log_psi(p, xj);
        return std::exp(lf);
    }
    throw std::invalid_argument("conditional_pdf: xi == xj is the diagonal atom");
}

double conditional_diag_mass(const BegledParams& p, int i, double x) {
    if (i != 1 && i != 2) throw std::domain_error("conditional_diag_mass: i must be 1 or 2");
    if (x <= 0.0) throw std::domain_error("conditional_diag_mass: x must be positive");
    const double ti = i == 1 ? p.theta1 : p.theta2;
    const double tj = i == 1 ? p.theta2 : p.theta1;
    return p.theta3 / (tj + p.theta3) * std::exp(ti * log_psi(p, x));
}

double max_cdf(const BegledParams& p, double t) {
    if (t < 0.0) throw std::domain_error("max_cdf: t must be nonnegative");
    return t == 0.0 ? 0.0 : egled_cdf(p.max_law(), t);
}

double min_cdf(const BegledParams& p, double t) {
    if (t < 0.0) throw std::domain_error("min_cdf: t must be nonnegative");
    if (t == 0.0) return 0.0;
    return egled_cdf(p.marginal(1), t) + egled_cdf(p.marginal(2), t) -
           egled_cdf(p.max_law(), t);
}

double min_pdf(const BegledParams& p, double t) {
    return egled_pdf(p.marginal(1), t) + egled_pdf(p.marginal(2), t) -
           egled_pdf(p.max_law(), t);
}

double median_correlation(const BegledParams& p) {
    const double m1 = egled_quantile(p.marginal(1), 0.5);
    const double m2 = egled_quantile(p.marginal(2), 0.5);
    return 4.0 * joint_cdf(p, {m1, m2}) - 1.0;
}

double tie_probability(const BegledParams& p) {
    return p.theta3 / p.theta_sum();
}

std::vector<BivariatePoint> sample_begled(const BegledParams& p, std::size_t n,
                                          RandomStream& rng) {
    const EgledParams u1(p.alpha, p.a, p.b, p.theta1);
    const EgledParams u2(p.alpha, p.a, p.b, p.theta2);
    const EgledParams u3(p.alpha, p.a, p.b, p.theta3);
    std::vector<BivariatePoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s1 = egled_quantile(u1, rng.next_uniform());
        const double s2 = egled_quantile(u2, rng.next_uniform());
        const double s3 = egled_quantile(u3, rng.next_uniform());
        out.push_back({std::max(s1, s3), std::max(s2, s3)});
    }
    return out;
}

}  // namespace moglib

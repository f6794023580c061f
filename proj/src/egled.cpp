#include "moglib/egled.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "moglib/error.hpp"
#include "moglib/special.hpp"

namespace moglib {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

EgledParams::EgledParams(double alpha_, double a_, double b_, double theta_)
    : alpha(alpha_), a(a_), b(b_), theta(theta_) {
    if (!(std::isfinite(alpha) && std::isfinite(a) && std::isfinite(b) &&
          std::isfinite(theta)))
        throw std::invalid_argument("EgledParams: fields must be finite");
    if (alpha <= 0.0 || theta <= 0.0)
        throw std::invalid_argument("EgledParams: alpha and theta must be positive");
    if (a < 0.0 || b < 0.0 || a + b <= 0.0)
        throw std::invalid_argument("EgledParams: need a, b >= 0 and a + b > 0");
}

double eta(const EgledParams& p, double x) {
    if (x < 0.0) throw std::domain_error("eta: x must be nonnegative");
    return p.a * x + 0.5 * p.b * x * x;
}

double cum_base(const EgledParams& p, double x) {
    const double e = eta(p, x);
    if (e <= 0.0) return 0.0;
    return std::exp(p.alpha * std::log(e));
}

double egled_log_cdf(const EgledParams& p, double x) {
    if (x <= 0.0) return -kInf;
    const double h = cum_base(p, x);
    if (h <= 0.0) return -kInf;
    return p.theta * log1mexp(h);
}

double egled_cdf(const EgledParams& p, double x) {
    return std::exp(egled_log_cdf(p, x));
}

double egled_log_pdf(const EgledParams& p, double x) {
    if (x <= 0.0) throw std::domain_error("egled_pdf: x must be positive");
    const double e = eta(p, x);
    const double log_e = std::log(e);
    const double h = std::exp(p.alpha * log_e);
    // For underflowed h, 1 - e^{-h} ~ h, so log1mexp(h) ~ alpha log eta.
    const double log_psi = h > 0.0 ? log1mexp(h) : p.alpha * log_e;
    // Survival underflow (h huge) drives this to -inf; the caller decides
    // whether that is a zero density or a likelihood retreat.
    return std::log(p.alpha * p.theta) + std::log(p.a + p.b * x) +
           (p.alpha - 1.0) * log_e - h + (p.theta - 1.0) * log_psi;
}

double egled_pdf(const EgledParams& p, double x) {
    const double lp = egled_log_pdf(p, x);
    return std::isfinite(lp) ? std::exp(lp) : (lp > 0.0 ? kInf : 0.0);
}

double egled_quantile(const EgledParams& p, double prob) {
    if (!(prob > 0.0 && prob < 1.0))
        throw std::domain_error("egled_quantile: prob must lie in (0,1)");
    // t = log(prob^{1/theta}) < 0; v = -log(1 - e^t) > 0; L = v^{1/alpha}.
    const double t = std::log(prob) / p.theta;
    const double v = t > -0.6931471805599453 ? -std::log(-std::expm1(t))
                                             : -std::log1p(-std::exp(t));
    const double big_l = std::exp(std::log(v) / p.alpha);
    if (p.b == 0.0) return big_l / p.a;
    // Stable root of (b/2) x^2 + a x = L (no cancellation for small b L).
    return 2.0 * big_l / (p.a + std::sqrt(p.a * p.a + 2.0 * p.b * big_l));
}

std::vector<double> sample_egled(const EgledParams& p, std::size_t n, RandomStream& rng) {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(egled_quantile(p, rng.next_uniform()));
    return out;
}

double egled_hazard(const EgledParams& p, double x) {
    const double survival = -std::expm1(egled_log_cdf(p, x));
    if (survival <= 0.0)
        throw saturated_survival_error("egled_hazard: survival underflowed to zero");
    return egled_pdf(p, x) / survival;
}

double egled_reversed_hazard(const EgledParams& p, double x) {
    const double lc = egled_log_cdf(p, x);
    if (lc == -kInf)
        throw degenerate_window_error("egled_reversed_hazard: cdf underflowed to zero");
    return std::exp(egled_log_pdf(p, x) - lc);
}

double egled_moment(const EgledParams& p, int r, const QuadConfig& cfg) {
    if (r < 1) throw std::domain_error("egled_moment: r must be >= 1");
    return integrate_semi_infinite(
        [&](double x) { return std::pow(x, r) * egled_pdf(p, x); }, cfg);
}

double egled_mean_waiting_time(const EgledParams& p, double t, const QuadConfig& cfg) {
    if (t <= 0.0) throw std::domain_error("egled_mean_waiting_time: t must be positive");
    const double ft = egled_cdf(p, t);
    if (ft <= 0.0)
        throw degenerate_window_error("egled_mean_waiting_time: cdf(t) underflowed");
    return integrate_finite([&](double x) { return egled_cdf(p, x); }, 0.0, t, cfg) / ft;
}

}  // namespace moglib

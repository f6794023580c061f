#include "moglib/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace moglib {

double log1mexp(double x) {
    if (x <= 0.0) throw std::domain_error("log1mexp: argument must be positive");
    // Split at ln 2 per Maechler's note on computing log(1 - exp(-x)).
    if (x <= 0.6931471805599453) return std::log(-std::expm1(-x));
    return std::log1p(-std::exp(-x));
}

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

// Regularized lower tail P(s,x) by power series, valid for x < s + 1.
double gamma_p_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    double ap = s;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Regularized upper tail Q(s,x) by modified Lentz continued fraction,
// valid for x >= s + 1.
double gamma_q_cf(double s, double x) {
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

}  // namespace

double regularized_gamma_q(double s, double x) {
    if (s <= 0.0) throw std::domain_error("regularized_gamma_q: s must be positive");
    if (x < 0.0) throw std::domain_error("regularized_gamma_q: x must be nonnegative");
    if (x == 0.0) return 1.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
    return gamma_q_cf(s, x);
}

double upper_incomplete_gamma(double s, double x) {
    return regularized_gamma_q(s, x) * std::tgamma(s);
}

double chi_square_sf(double x, int df) {
    if (df < 1) throw std::domain_error("chi_square_sf: df must be positive");
    if (x < 0.0) throw std::domain_error("chi_square_sf: x must be nonnegative");
    return regularized_gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace moglib

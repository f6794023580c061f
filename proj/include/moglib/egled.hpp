#ifndef MOGLIB_EGLED_HPP
#define MOGLIB_EGLED_HPP

#include <vector>

#include "moglib/quadrature.hpp"
#include "moglib/rng.hpp"

namespace moglib {

// Exponentiated generalized linear exponential distribution
// F(x) = (1 - exp(-(a x + b x^2 / 2)^alpha))^theta on x >= 0.
struct EgledParams {
    double alpha;  // shape, > 0
    double a;      // linear scale, >= 0
    double b;      // quadratic scale, >= 0; a + b > 0
    double theta;  // exponentiation shape, > 0

    EgledParams(double alpha_, double a_, double b_, double theta_);
};

double eta(const EgledParams& p, double x);

// Cumulative hazard base eta(x)^alpha, evaluated as exp(alpha log eta).
double cum_base(const EgledParams& p, double x);

double egled_cdf(const EgledParams& p, double x);
double egled_log_cdf(const EgledParams& p, double x);
double egled_pdf(const EgledParams& p, double x);
// log f(x); -inf where the density underflows.
double egled_log_pdf(const EgledParams& p, double x);

double egled_quantile(const EgledParams& p, double prob);

std::vector<double> sample_egled(const EgledParams& p, std::size_t n, RandomStream& rng);

double egled_hazard(const EgledParams& p, double x);
double egled_reversed_hazard(const EgledParams& p, double x);

// E[X^r] by adaptive quadrature on (0, inf).
double egled_moment(const EgledParams& p, int r, const QuadConfig& cfg = {});

// (1/F(t)) * int_0^t F(x) dx.
double egled_mean_waiting_time(const EgledParams& p, double t,
                               const QuadConfig& cfg = {});

}  // namespace moglib

#endif

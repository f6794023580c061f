#ifndef MOGLIB_QUADRATURE_HPP
#define MOGLIB_QUADRATURE_HPP

#include <functional>

namespace moglib {

struct QuadConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

// Globally adaptive Gauss-Kronrod 7/15 on [lo, hi]. Endpoints are never
// evaluated, so integrable endpoint singularities are fine.
QuadResult quad_finite(const Integrand1D& f, double lo, double hi,
                       const QuadConfig& cfg = {});

// Integral over (0, inf) via the substitution x = u / (1 - u).
QuadResult quad_semi_infinite(const Integrand1D& f, const QuadConfig& cfg = {});

// Integral over (lo, inf) via y = lo + u / (1 - u).
QuadResult quad_tail(const Integrand1D& f, double lo, const QuadConfig& cfg = {});

// Iterated integral of f over the open wedge {0 < x1 < x2 < inf}.
QuadResult quad_below_diagonal(const Integrand2D& f, const QuadConfig& cfg = {});

// Iterated integral of f over the rectangle (0, t1) x (0, t2).
QuadResult quad_rectangle(const Integrand2D& f, double t1, double t2,
                          const QuadConfig& cfg = {});

// As quad_* above but throws quadrature_error when the subdivision budget
// is exhausted before the tolerance is met.
double integrate_finite(const Integrand1D& f, double lo, double hi,
                        const QuadConfig& cfg = {});
double integrate_semi_infinite(const Integrand1D& f, const QuadConfig& cfg = {});
double integrate_tail(const Integrand1D& f, double lo, const QuadConfig& cfg = {});

}  // namespace moglib

#endif

#ifndef MOGLIB_OPTIMIZE_HPP
#define MOGLIB_OPTIMIZE_HPP

#include <functional>
#include <vector>

namespace moglib {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

struct SimplexConfig {
    double diam_tol = 1e-8;       // max vertex distance to best vertex
    double val_tol = 1e-9;        // worst-best value spread
    int max_iter = 20000;
    double init_step = 0.25;      // initial simplex edge, scaled per coordinate
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Nelder-Mead with standard coefficients (reflect 1, expand 2, contract 0.5,
// shrink 0.5). The objective may return +inf as an infeasibility sentinel.
SimplexResult simplex_minimize(const ObjectiveFn& f, const std::vector<double>& x0,
                               const SimplexConfig& cfg = {});

// Central-difference gradient with step h_i = 1e-6 * max(1, |x_i|).
std::vector<double> fd_gradient(const ObjectiveFn& f, const std::vector<double>& x);

// Golden-section search for a minimizer of f on [lo, hi]. The objective may
// return +inf as an infeasibility sentinel. Stops when the bracket shrinks
// below xtol (absolute).
double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       double xtol = 1e-10);

}  // namespace moglib

#endif

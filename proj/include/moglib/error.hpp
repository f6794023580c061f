#ifndef MOGLIB_ERROR_HPP
#define MOGLIB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace moglib {

// Survival (or tail mass) is numerically zero where a ratio needs it.
struct saturated_survival_error : std::runtime_error {
    explicit saturated_survival_error(const std::string& what)
        : std::runtime_error(what) {}
};

// CDF mass over the conditioning window underflows to zero.
struct degenerate_window_error : std::runtime_error {
    explicit degenerate_window_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Adaptive quadrature exhausted its subdivision budget.
struct quadrature_error : std::runtime_error {
    quadrature_error(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// No optimizer start produced a finite likelihood.
struct fit_error : std::runtime_error {
    explicit fit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace moglib

#endif

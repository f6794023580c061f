#ifndef MOGLIB_BEGLED_HPP
#define MOGLIB_BEGLED_HPP

#include <vector>

#include "moglib/egled.hpp"
#include "moglib/rng.hpp"

namespace moglib {

struct BivariatePoint {
    double x1;
    double x2;
};

// Marshall-Olkin bivariate EGLED: X_k = max(U_k, U_3) with independent
// U_i ~ EGLED(alpha, a, b, theta_i). The shared shock U_3 puts positive
// mass on the diagonal x1 = x2.
struct BegledParams {
    double alpha;
    double a;
    double b;
    double theta1;
    double theta2;
    double theta3;

    BegledParams(double alpha_, double a_, double b_, double theta1_,
                 double theta2_, double theta3_);

    // Marginal of X_k is EGLED with shape theta_k + theta3.
    EgledParams marginal(int k) const;
    // Law of max(X1, X2): EGLED with shape theta1 + theta2 + theta3.
    EgledParams max_law() const;
    double theta_sum() const { return theta1 + theta2 + theta3; }
};

// The joint density has three branches: an absolutely continuous density on
// each open half-plane and a one-dimensional density along the diagonal.
enum class Region { Below, Above, Diagonal };

Region classify_point(double x1, double x2, double tie_tol = 0.0);

double joint_cdf(const BegledParams& p, const BivariatePoint& pt);

// Branch density; Diagonal evaluates the line density at the midpoint of
// (x1, x2) so near-ties classified by tolerance stay well-defined.
double joint_pdf(const BegledParams& p, const BivariatePoint& pt, Region region);
double log_joint_pdf(const BegledParams& p, const BivariatePoint& pt, Region region);

double marginal_cdf(const BegledParams& p, int k, double x);
double marginal_pdf(const BegledParams& p, int k, double x);

// Density of X_i at xi given X_j = xj (i in {1,2}, j the other index),
// continuous branches only.
double conditional_pdf(const BegledParams& p, int i, double xi, double xj);
// Discrete mass of the conditional law at the diagonal atom xi = xj = x.
double conditional_diag_mass(const BegledParams& p, int i, double x);

double max_cdf(const BegledParams& p, double t);
double min_cdf(const BegledParams& p, double t);
// Density of min(X1, X2): analytic signed sum of the three EGLED branch pdfs.
double min_pdf(const BegledParams& p, double t);

double median_correlation(const BegledParams& p);

// Mass of the singular diagonal component, theta3 / (theta1+theta2+theta3).
double tie_probability(const BegledParams& p);

std::vector<BivariatePoint> sample_begled(const BegledParams& p, std::size_t n,
                                          RandomStream& rng);

}  // namespace moglib

#endif

#ifndef MOGLIB_RELIABILITY_HPP
#define MOGLIB_RELIABILITY_HPP

#include "moglib/begled.hpp"
#include "moglib/quadrature.hpp"

namespace moglib {

// P[X1 < X2] = (theta2 + theta3) / (theta1 + theta2 + 2 theta3).
double stress_strength(const BegledParams& p);

// P[X1 > x1, X2 > x2] = 1 - F1 - F2 + F.
double joint_reliability(const BegledParams& p, const BivariatePoint& pt);

// Basu bivariate hazard f / R and reversed hazard f / F.
double joint_hazard(const BegledParams& p, const BivariatePoint& pt, Region region);
double joint_reversed_hazard(const BegledParams& p, const BivariatePoint& pt,
                             Region region);

// (1/F(t1,t2)) * int_0^t1 int_0^t2 F, by nested adaptive quadrature.
double joint_mean_waiting_time(const BegledParams& p, double t1, double t2,
                               const QuadConfig& cfg = QuadConfig{1e-6, 1e-10, 4000});

// Two-component parallel-system life history (Cox vector).
struct VectorHazard {
    double h_min;  // hazard of min(X1,X2) at x, computed definitionally
    double h12;    // component-1 hazard at x1 given component 2 failed at x2
    double h21;
};

struct VectorAvailability {
    double v_min;
    double v12;
    double v21;
};

struct VectorMrl {
    double m_min;
    double m12;
    double m21;
};

VectorHazard vector_hazard(const BegledParams& p, double x, double x1, double x2);

VectorAvailability vector_availability(const BegledParams& p, double x, double x1,
                                       double x2,
                                       const QuadConfig& cfg = QuadConfig{1e-6, 1e-10, 4000});

VectorMrl vector_mrl(const BegledParams& p, double x, double x1, double x2,
                     const QuadConfig& cfg = QuadConfig{1e-6, 1e-10, 4000});

// Closed forms for the min-hazard and the conditional hazards as printed in
// the source material for this family. Kept separate because the min-hazard
// form goes negative for theta sums above one; the definitional routes above
// are authoritative. Exposed for side-by-side comparison only.
double paper_form_min_hazard(const BegledParams& p, double x);
double paper_form_h12(const BegledParams& p, double x1);
double paper_form_h21(const BegledParams& p, double x2);

}  // namespace moglib

#endif

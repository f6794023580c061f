#include "moglib/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "moglib/error.hpp"

namespace moglib {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (positive half).
// Odd-index nodes carry the embedded 7-point Gauss rule.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const Integrand1D& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double resk = 0.0;
    double resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kNodes[i];
        double fv;
        if (i == 7) {
            fv = f(c);
        } else {
            fv = f(c - dx) + f(c + dx);
        }
        resk += kWeightsK[i] * fv;
        if (i % 2 == 1) resg += kWeightsG[i / 2] * fv;
    }
    Segment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.value = resk * h;
    seg.error = std::fabs((resk - resg) * h);
    if (!std::isfinite(seg.value)) {
        seg.value = 0.0;
        seg.error = std::numeric_limits<double>::infinity();
    }
    return seg;
}

QuadResult adapt(const Integrand1D& f, double lo, double hi, const QuadConfig& cfg) {
    std::priority_queue<Segment> segs;
    Segment first = gk15(f, lo, hi);
    double total = first.value;
    double total_err = first.error;
    segs.push(first);
    int n = 1;
    while (n < cfg.max_subdivisions) {
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
        if (total_err <= tol) break;
        Segment worst = segs.top();
        segs.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Interval at machine resolution; accept its estimate as-is.
            worst.error = 0.0;
            segs.push(worst);
            total_err = 0.0;
            for (auto copy = segs; !copy.empty(); copy.pop()) total_err += copy.top().error;
            continue;
        }
        Segment left = gk15(f, worst.lo, mid);
        Segment right = gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        segs.push(left);
        segs.push(right);
        ++n;
    }
    QuadResult r;
    r.value = total;
    r.error = total_err;
    r.subdivisions = n;
    r.converged = total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
    return r;
}

}  // namespace

QuadResult quad_finite(const Integrand1D& f, double lo, double hi, const QuadConfig& cfg) {
    if (hi <= lo) return QuadResult{0.0, 0.0, 0, true};
    return adapt(f, lo, hi, cfg);
}

QuadResult quad_semi_infinite(const Integrand1D& f, const QuadConfig& cfg) {
    return adapt(
        [&f](double u) {
            const double w = 1.0 - u;
            return f(u / w) / (w * w);
        },
        0.0, 1.0, cfg);
}

QuadResult quad_tail(const Integrand1D& f, double lo, const QuadConfig& cfg) {
    return adapt(
        [&f, lo](double u) {
            const double w = 1.0 - u;
            return f(lo + u / w) / (w * w);
        },
        0.0, 1.0, cfg);
}

QuadResult quad_below_diagonal(const Integrand2D& f, const QuadConfig& cfg) {
    QuadConfig inner = cfg;
    inner.rel_tol = 0.1 * cfg.rel_tol;
    inner.max_subdivisions = std::max(200, cfg.max_subdivisions / 8);
    return quad_semi_infinite(
        [&](double x2) {
            return quad_finite([&](double x1) { return f(x1, x2); }, 0.0, x2, inner).value;
        },
        cfg);
}

QuadResult quad_rectangle(const Integrand2D& f, double t1, double t2, const QuadConfig& cfg) {
    QuadConfig inner = cfg;
    inner.rel_tol = 0.1 * cfg.rel_tol;
    inner.max_subdivisions = std::max(200, cfg.max_subdivisions / 8);
    return quad_finite(
        [&](double x1) {
            return quad_finite([&](double x2) { return f(x1, x2); }, 0.0, t2, inner).value;
        },
        0.0, t1, cfg);
}

namespace {
double checked(const QuadResult& r, const char* what) {
    if (!r.converged) throw quadrature_error(what, r.value, r.error);
    return r.value;
}
}  // namespace

double integrate_finite(const Integrand1D& f, double lo, double hi, const QuadConfig& cfg) {
    return checked(quad_finite(f, lo, hi, cfg), "quad_finite: subdivision budget exhausted");
}

double integrate_semi_infinite(const Integrand1D& f, const QuadConfig& cfg) {
    return checked(quad_semi_infinite(f, cfg), "quad_semi_infinite: subdivision budget exhausted");
}

double integrate_tail(const Integrand1D& f, double lo, const QuadConfig& cfg) {
    return checked(quad_tail(f, lo, cfg), "quad_tail: subdivision budget exhausted");
}

}  // namespace moglib

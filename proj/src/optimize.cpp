#include "moglib/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace moglib {

namespace {

double diameter(const std::vector<std::vector<double>>& verts) {
    double d = 0.0;
    for (std::size_t j = 1; j < verts.size(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < verts[0].size(); ++i) {
            const double diff = verts[j][i] - verts[0][i];
            s += diff * diff;
        }
        d = std::max(d, std::sqrt(s));
    }
    return d;
}

}  // namespace

SimplexResult simplex_minimize(const ObjectiveFn& f, const std::vector<double>& x0,
                               const SimplexConfig& cfg) {
    const std::size_t n = x0.size();
    if (n == 0) throw std::invalid_argument("simplex_minimize: empty start point");

    std::vector<std::vector<double>> verts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i)
        verts[i + 1][i] += cfg.init_step * std::max(1.0, std::fabs(x0[i]));

    std::vector<double> fv(n + 1);
    for (std::size_t j = 0; j <= n; ++j) fv[j] = f(verts[j]);

    auto order = [&]() {
        std::vector<std::size_t> idx(n + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> v2(n + 1);
        std::vector<double> f2(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            v2[k] = verts[idx[k]];
            f2[k] = fv[idx[k]];
        }
        verts.swap(v2);
        fv.swap(f2);
    };

    int iter = 0;
    for (; iter < cfg.max_iter; ++iter) {
        order();
        if (std::isfinite(fv[n]) && fv[n] - fv[0] < cfg.val_tol &&
            diameter(verts) < cfg.diam_tol)
            break;

        // Centroid of all vertices but the worst.
        std::vector<double> cen(n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) cen[i] += verts[j][i] / static_cast<double>(n);

        auto along = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = cen[i] + t * (cen[i] - verts[n][i]);
            return p;
        };

        const std::vector<double> xr = along(1.0);
        const double fr = f(xr);
        if (fr < fv[0]) {
            const std::vector<double> xe = along(2.0);
            const double fe = f(xe);
            if (fe < fr) {
                verts[n] = xe;
                fv[n] = fe;
            } else {
                verts[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            verts[n] = xr;
            fv[n] = fr;
        } else {
            const bool outside = fr < fv[n];
            const std::vector<double> xc = along(outside ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                verts[n] = xc;
                fv[n] = fc;
            } else {
                // Shrink toward the best vertex.
                for (std::size_t j = 1; j <= n; ++j) {
                    for (std::size_t i = 0; i < n; ++i)
                        verts[j][i] = verts[0][i] + 0.5 * (verts[j][i] - verts[0][i]);
                    fv[j] = f(verts[j]);
                }
            }
        }
    }

    order();
    SimplexResult r;
    r.x = verts[0];
    r.value = fv[0];
    r.iterations = iter;
    r.converged = iter < cfg.max_iter;
    return r;
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       double xtol) {
    if (!(lo < hi)) throw std::invalid_argument("golden_minimize: need lo < hi");
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

std::vector<double> fd_gradient(const ObjectiveFn& f, const std::vector<double>& x) {
    std::vector<double> g(x.size());
    std::vector<double> p = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = 1e-6 * std::max(1.0, std::fabs(x[i]));
        p[i] = x[i] + h;
        const double fp = f(p);
        p[i] = x[i] - h;
        const double fm = f(p);
        p[i] = x[i];
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw std::runtime_error("fd_gradient: non-finite sample near x");
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

}  // namespace moglib

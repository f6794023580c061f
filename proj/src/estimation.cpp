#include "moglib/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "moglib/error.hpp"
#include "moglib/rng.hpp"
#include "moglib/special.hpp"

namespace moglib {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kParamFloor = 1e-300;
}  // namespace

PartitionedSample partition_sample(const std::vector<BivariatePoint>& pairs,
                                   double tie_tol) {
    if (pairs.empty())
        throw std::invalid_argument("partition_sample: sample must be nonempty");
    if (tie_tol < 0.0)
        throw std::invalid_argument("partition_sample: tie tolerance must be >= 0");
    PartitionedSample s;
    s.pairs = pairs;
    s.tie_tol = tie_tol;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].x1 < 0.0 || pairs[i].x2 < 0.0)
            throw std::invalid_argument("partition_sample: coordinates must be >= 0");
        switch (classify_point(pairs[i].x1, pairs[i].x2, tie_tol)) {
            case Region::Below: s.idx_below.push_back(i); break;
            case Region::Above: s.idx_above.push_back(i); break;
            case Region::Diagonal: s.idx_diag.push_back(i); break;
        }
    }
    return s;
}

double log_likelihood(const BegledParams& p, const PartitionedSample& s) {
    double total = 0.0;
    auto accumulate = [&](const std::vector<std::size_t>& idx, Region region) {
        for (std::size_t i : idx) {
            const double lp = log_joint_pdf(p, s.pairs[i], region);
            if (!std::isfinite(lp)) {
                total = -kInf;
                return false;
            }
            total += lp;
        }
        return true;
    };
    if (!accumulate(s.idx_below, Region::Below)) return -kInf;
    if (!accumulate(s.idx_above, Region::Above)) return -kInf;
    if (!accumulate(s.idx_diag, Region::Diagonal)) return -kInf;
    return total;
}

namespace {

// Shared per-coordinate pieces of the score: the derivative of
// ln(a+bx) + (alpha-1) ln eta + c ln(1-e^{-eta^alpha}) - eta^alpha
// with respect to alpha, a and b.
struct ScoreAccum {
    double d_alpha = 0.0;
    double d_a = 0.0;
    double d_b = 0.0;

    void add(const BegledParams& p, double x, double c) {
        const double e = p.a * x + 0.5 * p.b * x * x;
        const double log_e = std::log(e);
        const double h = std::exp(p.alpha * log_e);
        const double em1 = std::expm1(h);  // overflows to inf for large h: fine
        const double tail = c / em1 - 1.0;
        const double h_pow = std::exp((p.alpha - 1.0) * log_e);  // eta^{alpha-1}
        d_alpha += log_e + h * log_e * tail;
        d_a += 1.0 / (p.a + p.b * x) + (p.alpha - 1.0) * x / e +
               p.alpha * x * h_pow * tail;
        d_b += x / (p.a + p.b * x) + 0.5 * (p.alpha - 1.0) * x * x / e +
               0.5 * p.alpha * x * x * h_pow * tail;
    }
};

double log_psi_of(const BegledParams& p, double x) {
    const double e = p.a * x + 0.5 * p.b * x * x;
    const double h = std::exp(p.alpha * std::log(e));
    return h > 0.0 ? log1mexp(h) : p.alpha * std::log(e);
}

}  // namespace

std::array<double, 6> score(const BegledParams& p, const PartitionedSample& s) {
    const double n1 = static_cast<double>(s.n1());
    const double n2 = static_cast<double>(s.n2());
    const double n3 = static_cast<double>(s.n3());

    ScoreAccum acc;
    double sum_lpsi_b1 = 0.0;  // sum ln Psi(x1) over I1
    double sum_lpsi_b2 = 0.0;  // sum ln Psi(x2) over I1
    double sum_lpsi_a1 = 0.0;  // sum ln Psi(x1) over I2
    double sum_lpsi_a2 = 0.0;  // sum ln Psi(x2) over I2
    double sum_lpsi_d = 0.0;   // sum ln Psi(x) over I3

    for (std::size_t i : s.idx_below) {
        const auto& pt = s.pairs[i];
        acc.add(p, pt.x1, p.theta1 + p.theta3 - 1.0);
        acc.add(p, pt.x2, p.theta2 - 1.0);
        sum_lpsi_b1 += log_psi_of(p, pt.x1);
        sum_lpsi_b2 += log_psi_of(p, pt.x2);
    }
    for (std::size_t i : s.idx_above) {
        const auto& pt = s.pairs[i];
        acc.add(p, pt.x1, p.theta1 - 1.0);
        acc.add(p, pt.x2, p.theta2 + p.theta3 - 1.0);
        sum_lpsi_a1 += log_psi_of(p, pt.x1);
        sum_lpsi_a2 += log_psi_of(p, pt.x2);
    }
    for (std::size_t i : s.idx_diag) {
        const double x = 0.5 * (s.pairs[i].x1 + s.pairs[i].x2);
        acc.add(p, x, p.theta_sum() - 1.0);
        sum_lpsi_d += log_psi_of(p, x);
    }

    std::array<double, 6> g{};
    g[0] = acc.d_alpha + (2.0 * n1 + 2.0 * n2 + n3) / p.alpha;
    g[1] = acc.d_a;
    g[2] = acc.d_b;
    g[3] = n1 / (p.theta1 + p.theta3) + sum_lpsi_b1 + n2 / p.theta1 + sum_lpsi_a1 +
           sum_lpsi_d;
    g[4] = n1 / p.theta2 + sum_lpsi_b2 + n2 / (p.theta2 + p.theta3) + sum_lpsi_a2 +
           sum_lpsi_d;
    g[5] = n1 / (p.theta1 + p.theta3) + sum_lpsi_b1 + n2 / (p.theta2 + p.theta3) +
           sum_lpsi_a2 + n3 / p.theta3 + sum_lpsi_d;
    return g;
}

std::string model_name(ModelTag tag) {
    switch (tag) {
        case ModelTag::Begled: return "begled";
        case ModelTag::Bvge: return "bvge";
        case ModelTag::Bglfr: return "bglfr";
    }
    return "?";
}

int free_param_count(ModelTag tag) {
    switch (tag) {
        case ModelTag::Begled: return 6;
        case ModelTag::Bvge: return 4;
        case ModelTag::Bglfr: return 5;
    }
    return 0;
}

namespace {

// Free-parameter layout per model, all optimized as logs.
std::vector<double> encode(const BegledParams& p, ModelTag tag) {
    switch (tag) {
        case ModelTag::Begled:
            return {std::log(p.alpha), std::log(p.a), std::log(p.b),
                    std::log(p.theta1), std::log(p.theta2), std::log(p.theta3)};
        case ModelTag::Bvge:
            return {std::log(p.a), std::log(p.theta1), std::log(p.theta2),
                    std::log(p.theta3)};
        case ModelTag::Bglfr:
            return {std::log(p.a), std::log(p.b), std::log(p.theta1),
                    std::log(p.theta2), std::log(p.theta3)};
    }
    throw std::invalid_argument("encode: bad model tag");
}

double pexp(double v) { return std::clamp(std::exp(v), kParamFloor, 1e300); }

BegledParams decode(const std::vector<double>& v, ModelTag tag) {
    switch (tag) {
        case ModelTag::Begled:
            return BegledParams(pexp(v[0]), pexp(v[1]), pexp(v[2]), pexp(v[3]),
                                pexp(v[4]), pexp(v[5]));
        case ModelTag::Bvge:
            return BegledParams(1.0, pexp(v[0]), 0.0, pexp(v[1]), pexp(v[2]),
                                pexp(v[3]));
        case ModelTag::Bglfr:
            return BegledParams(1.0, pexp(v[0]), pexp(v[1]), pexp(v[2]), pexp(v[3]),
                                pexp(v[4]));
    }
    throw std::invalid_argument("decode: bad model tag");
}

MarginalModel marginal_family(ModelTag tag) {
    switch (tag) {
        case ModelTag::Begled: return MarginalModel::EGLE;
        case ModelTag::Bvge: return MarginalModel::GE;
        case ModelTag::Bglfr: return MarginalModel::GLFR;
    }
    throw std::invalid_argument("marginal_family: bad model tag");
}

// Fit each margin in the matching univariate family, then split each
// exponent evenly between the private and shared shocks.
BegledParams heuristic_start(const PartitionedSample& s, ModelTag tag,
                             const FitConfig& cfg) {
    std::vector<double> xs1, xs2;
    xs1.reserve(s.n());
    xs2.reserve(s.n());
    for (const auto& pt : s.pairs) {
        xs1.push_back(std::max(pt.x1, 1e-12));
        xs2.push_back(std::max(pt.x2, 1e-12));
    }
    FitConfig mcfg = cfg;
    mcfg.starts = std::max(2, cfg.starts / 2);
    const MarginalFit m1 = fit_marginal_mle(xs1, marginal_family(tag), mcfg);
    const MarginalFit m2 = fit_marginal_mle(xs2, marginal_family(tag), mcfg);
    const double alpha = tag == ModelTag::Begled
                             ? std::sqrt(m1.params.alpha * m2.params.alpha)
                             : 1.0;
    const double a = std::max(0.5 * (m1.params.a + m2.params.a), 1e-8);
    const double b = tag == ModelTag::Bvge
                         ? 0.0
                         : std::max(0.5 * (m1.params.b + m2.params.b), 1e-8);
    const double t1 = std::max(0.5 * m1.params.theta, 1e-6);
    const double t2 = std::max(0.5 * m2.params.theta, 1e-6);
    const double t3 = std::max(0.25 * (m1.params.theta + m2.params.theta), 1e-6);
    return BegledParams(alpha, a, b, t1, t2, t3);
}

}  // namespace

FitResult fit_mle(const PartitionedSample& s, ModelTag tag,
                  const std::optional<BegledParams>& init, const FitConfig& cfg) {
    const ObjectiveFn objective = [&](const std::vector<double>& v) {
        const double ll = log_likelihood(decode(v, tag), s);
        return std::isfinite(ll) ? -ll : kInf;
    };

    std::vector<std::vector<double>> starts;
    if (init) starts.push_back(encode(*init, tag));
    std::vector<double> heuristic;
    try {
        heuristic = encode(heuristic_start(s, tag, cfg), tag);
        starts.push_back(heuristic);
    } catch (const std::exception&) {
        heuristic = encode(BegledParams(1.0, 1.0, tag == ModelTag::Bvge ? 0.0 : 0.5,
                                        1.0, 1.0, 1.0),
                           tag);
        starts.push_back(heuristic);
    }
    RandomStream jitter(cfg.seed, 0x6d6f676c6962ull);
    while (static_cast<int>(starts.size()) < std::max(1, cfg.starts)) {
        std::vector<double> v = heuristic;
        for (double& vi : v) vi += std::log(3.0) * (2.0 * jitter.next_uniform() - 1.0);
        starts.push_back(std::move(v));
    }

    SimplexResult best;
    best.value = kInf;
    for (const auto& x0 : starts) {
        SimplexResult r = simplex_minimize(objective, x0, cfg.simplex);
        if (r.value < best.value) best = r;
    }
    if (!std::isfinite(best.value))
        throw fit_error("fit_mle: no start produced a finite likelihood (" +
                        model_name(tag) + ")");

    // One restart from the incumbent; cheap protection against simplex collapse.
    SimplexResult polished = simplex_minimize(objective, best.x, cfg.simplex);
    if (polished.value < best.value) best = polished;

    FitResult fit;
    fit.params = decode(best.x, tag);
    fit.neg_log_lik = best.value;
    fit.converged = best.converged;
    fit.iterations = best.iterations;
    fit.model = tag;
    fit.k = free_param_count(tag);
    for (double v : best.x)
        if (std::exp(v) <= cfg.lower_clamp) fit.at_boundary = true;
    return fit;
}

IcSet information_criteria(const FitResult& fit, std::size_t n) {
    const double k = fit.k;
    const double nn = static_cast<double>(n);
    if (nn <= k + 1.0)
        throw std::domain_error("information_criteria: CAIC needs n > k + 1");
    IcSet ic;
    ic.aic = 2.0 * k + 2.0 * fit.neg_log_lik;
    ic.caic = ic.aic + 2.0 * k * (k + 1.0) / (nn - k - 1.0);
    ic.hqic = 2.0 * k * std::log(std::log(nn)) + 2.0 * fit.neg_log_lik;
    return ic;
}

LrtResult likelihood_ratio_test(const FitResult& full, const FitResult& restricted) {
    if (full.model != ModelTag::Begled || restricted.model == ModelTag::Begled)
        throw std::invalid_argument(
            "likelihood_ratio_test: restricted model must be nested in begled");
    if (restricted.neg_log_lik < full.neg_log_lik - 1e-6)
        throw std::invalid_argument(
            "likelihood_ratio_test: restricted fit beats the full fit");
    LrtResult r;
    r.lambda = std::max(0.0, 2.0 * (restricted.neg_log_lik - full.neg_log_lik));
    r.df = full.k - restricted.k;
    r.p_value = chi_square_sf(r.lambda, r.df);
    return r;
}

std::string marginal_model_name(MarginalModel m) {
    switch (m) {
        case MarginalModel::E: return "e";
        case MarginalModel::GE: return "ge";
        case MarginalModel::GLFR: return "glfr";
        case MarginalModel::EGLE: return "egle";
    }
    return "?";
}

int marginal_free_params(MarginalModel m) {
    switch (m) {
        case MarginalModel::E: return 1;
        case MarginalModel::GE: return 2;
        case MarginalModel::GLFR: return 3;
        case MarginalModel::EGLE: return 4;
    }
    return 0;
}

namespace {

EgledParams decode_marginal(const std::vector<double>& v, MarginalModel m) {
    switch (m) {
        case MarginalModel::E: return EgledParams(1.0, pexp(v[0]), 0.0, 1.0);
        case MarginalModel::GE: return EgledParams(1.0, pexp(v[0]), 0.0, pexp(v[1]));
        case MarginalModel::GLFR:
            return EgledParams(1.0, pexp(v[0]), pexp(v[1]), pexp(v[2]));
        case MarginalModel::EGLE:
            return EgledParams(pexp(v[3]), pexp(v[0]), pexp(v[1]), pexp(v[2]));
    }
    throw std::invalid_argument("decode_marginal: bad model");
}

double marginal_nll(const EgledParams& p, const std::vector<double>& xs) {
    double nll = 0.0;
    for (double x : xs) {
        const double lp = egled_log_pdf(p, x);
        if (!std::isfinite(lp)) return kInf;
        nll -= lp;
    }
    return nll;
}

}  // namespace

MarginalFit fit_marginal_mle(const std::vector<double>& xs, MarginalModel model,
                             const FitConfig& cfg) {
    if (xs.empty())
        throw std::invalid_argument("fit_marginal_mle: sample must be nonempty");
    for (double x : xs)
        if (!(x > 0.0))
            throw std::invalid_argument("fit_marginal_mle: values must be positive");

    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) /
                        static_cast<double>(xs.size());
    if (model == MarginalModel::E) {
        // Closed form: reciprocal sample mean.
        MarginalFit fit;
        fit.params = EgledParams(1.0, 1.0 / mean, 0.0, 1.0);
        fit.neg_log_lik = marginal_nll(fit.params, xs);
        fit.converged = true;
        return fit;
    }

    const ObjectiveFn objective = [&](const std::vector<double>& v) {
        return marginal_nll(decode_marginal(v, model), xs);
    };

    std::vector<double> base;
    switch (model) {
        case MarginalModel::GE: base = {std::log(1.0 / mean), 0.0}; break;
        case MarginalModel::GLFR:
            base = {std::log(0.5 / mean), std::log(0.5 / (mean * mean)), 0.0};
            break;
        case MarginalModel::EGLE:
            base = {std::log(0.5 / mean), std::log(0.5 / (mean * mean)), 0.0, 0.0};
            break;
        default: break;
    }

    RandomStream jitter(cfg.seed, 0x6d617267ull);
    SimplexResult best;
    best.value = kInf;
    for (int start = 0; start < std::max(1, cfg.starts); ++start) {
        std::vector<double> x0 = base;
        if (start > 0)
            for (double& vi : x0)
                vi += std::log(3.0) * (2.0 * jitter.next_uniform() - 1.0);
        SimplexResult r = simplex_minimize(objective, x0, cfg.simplex);
        if (r.value < best.value) best = r;
    }
    if (!std::isfinite(best.value))
        throw fit_error("fit_marginal_mle: no start produced a finite likelihood");
    SimplexResult polished = simplex_minimize(objective, best.x, cfg.simplex);
    if (polished.value < best.value) best = polished;

    MarginalFit fit;
    fit.params = decode_marginal(best.x, model);
    fit.neg_log_lik = best.value;
    fit.converged = best.converged;
    return fit;
}

GofResult gof_marginal(const std::vector<double>& xs, MarginalModel model,
                       const FitConfig& cfg) {
    const MarginalFit fit = fit_marginal_mle(xs, model, cfg);
    const std::size_t n = xs.size();
    std::vector<double> u;
    u.reserve(n);
    GofResult gof;
    for (double x : xs) u.push_back(egled_cdf(fit.params, x));
    std::sort(u.begin(), u.end());
    for (double& ui : u) {
        const double clamped = std::clamp(ui, 1e-12, 1.0 - 1e-12);
        if (clamped != ui) gof.clamped = true;
        ui = clamped;
    }

    const double nn = static_cast<double>(n);
    double a2 = 0.0;
    double w2 = 1.0 / (12.0 * nn);
    for (std::size_t i = 1; i <= n; ++i) {
        const double ui = u[i - 1];
        const double urev = u[n - i];
        a2 += (2.0 * static_cast<double>(i) - 1.0) *
              (std::log(ui) + std::log1p(-urev));
        const double d = ui - (2.0 * static_cast<double>(i) - 1.0) / (2.0 * nn);
        w2 += d * d;
    }
    a2 = -nn - a2 / nn;

    gof.fitted = fit.params;
    gof.neg_log_lik = fit.neg_log_lik;
    gof.converged = fit.converged;
    gof.a_star = a2 * (1.0 + 0.75 / nn + 2.25 / (nn * nn));
    gof.w_star = w2 * (1.0 + 0.5 / nn);
    return gof;
}

}  // namespace moglib

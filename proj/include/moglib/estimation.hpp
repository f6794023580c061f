#ifndef MOGLIB_ESTIMATION_HPP
#define MOGLIB_ESTIMATION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "moglib/begled.hpp"
#include "moglib/optimize.hpp"

namespace moglib {

struct PartitionedSample {
    std::vector<BivariatePoint> pairs;
    std::vector<std::size_t> idx_below;  // x1 < x2 - tol
    std::vector<std::size_t> idx_above;  // x1 > x2 + tol
    std::vector<std::size_t> idx_diag;   // the rest
    double tie_tol = 0.0;

    std::size_t n1() const { return idx_below.size(); }
    std::size_t n2() const { return idx_above.size(); }
    std::size_t n3() const { return idx_diag.size(); }
    std::size_t n() const { return pairs.size(); }
};

PartitionedSample partition_sample(const std::vector<BivariatePoint>& pairs,
                                   double tie_tol = 0.0);

// Log-likelihood of the three-branch joint density. Returns -inf (never
// throws) when any branch density underflows, so optimizers can retreat.
double log_likelihood(const BegledParams& p, const PartitionedSample& s);

// Analytic gradient of log_likelihood in (alpha, a, b, theta1, theta2, theta3).
std::array<double, 6> score(const BegledParams& p, const PartitionedSample& s);

enum class ModelTag { Begled, Bvge, Bglfr };

std::string model_name(ModelTag tag);
int free_param_count(ModelTag tag);  // 6 / 4 / 5

struct FitConfig {
    int starts = 8;
    std::uint64_t seed = 20240901;
    SimplexConfig simplex{};
    double lower_clamp = 1e-8;  // parameters at or below this flag a boundary
};

struct FitResult {
    BegledParams params{1, 1, 0, 1, 1, 1};
    double neg_log_lik = 0.0;
    bool converged = false;
    bool at_boundary = false;
    int iterations = 0;
    ModelTag model = ModelTag::Begled;
    int k = 6;
};

// Maximizes the log-likelihood over log-transformed free parameters with
// multistart (moment-style heuristic plus jittered restarts). Bvge fixes
// alpha = 1, b = 0; Bglfr fixes alpha = 1.
FitResult fit_mle(const PartitionedSample& s, ModelTag tag,
                  const std::optional<BegledParams>& init = std::nullopt,
                  const FitConfig& cfg = {});

struct IcSet {
    double aic;
    double caic;
    double hqic;
};

IcSet information_criteria(const FitResult& fit, std::size_t n);

struct LrtResult {
    double lambda;
    int df;
    double p_value;
};

LrtResult likelihood_ratio_test(const FitResult& full, const FitResult& restricted);

// Univariate nested family for marginal goodness of fit.
enum class MarginalModel { E, GE, GLFR, EGLE };

std::string marginal_model_name(MarginalModel m);
int marginal_free_params(MarginalModel m);

struct GofResult {
    EgledParams fitted{1, 1, 0, 1};
    double neg_log_lik = 0.0;
    double a_star = 0.0;  // Anderson-Darling, small-sample adjusted
    double w_star = 0.0;  // Cramer-von Mises, small-sample adjusted
    bool converged = false;
    bool clamped = false;  // some probability transforms were clamped
};

GofResult gof_marginal(const std::vector<double>& xs, MarginalModel model,
                       const FitConfig& cfg = {});

// Univariate EGLED-family MLE used by gof_marginal and as a fit heuristic.
struct MarginalFit {
    EgledParams params{1, 1, 0, 1};
    double neg_log_lik = 0.0;
    bool converged = false;
};

MarginalFit fit_marginal_mle(const std::vector<double>& xs, MarginalModel model,
                             const FitConfig& cfg = {});

}  // namespace moglib

#endif

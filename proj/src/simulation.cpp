#include "moglib/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "moglib/error.hpp"
#include "moglib/rng.hpp"

namespace moglib {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MOGLIB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

std::array<double, 6> to_array(const BegledParams& p) {
    return {p.alpha, p.a, p.b, p.theta1, p.theta2, p.theta3};
}

double percentile(std::vector<double> sorted, double q) {
    // sorted ascending; linear interpolation between order statistics.
    const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

// One cycle updates each positive parameter by a golden-section likelihood
// maximization over [truth/10, 5*truth] in log scale, the others held fixed.
// Parameters generated at zero (restricted models) stay at zero.
std::array<double, 6> coordinate_wise_estimate(const PartitionedSample& s,
                                               const std::array<double, 6>& truth,
                                               int sweeps) {
    std::array<double, 6> est = truth;
    auto params_of = [](const std::array<double, 6>& v) {
        return BegledParams(v[0], v[1], v[2], v[3], v[4], v[5]);
    };
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (int i = 0; i < 6; ++i) {
            if (truth[i] <= 0.0) continue;
            const auto obj = [&](double lv) {
                std::array<double, 6> trial = est;
                trial[i] = std::exp(lv);
                return -log_likelihood(params_of(trial), s);
            };
            const double lo = std::log(0.1 * truth[i]);
            const double hi = std::log(5.0 * truth[i]);
            est[i] = std::exp(golden_minimize(obj, lo, hi, 1e-8));
        }
    }
    return est;
}

}  // namespace

SimulationReport run_simulation(const BegledParams& truth, const SimulationConfig& cfg) {
    if (cfg.replications < 1)
        throw std::invalid_argument("run_simulation: need at least one replication");
    if (cfg.estimator == RecoveryEstimator::CoordinateWise && cfg.sweeps < 1)
        throw std::invalid_argument("run_simulation: need at least one sweep");

    SimulationReport report;
    report.truth = truth;
    report.replications = cfg.replications;
    report.seed = cfg.seed;

    const int workers = resolve_workers(cfg.workers);
    const auto truth_arr = to_array(truth);

    for (std::size_t grid_i = 0; grid_i < cfg.n_grid.size(); ++grid_i) {
        const std::size_t n = cfg.n_grid[grid_i];
        std::vector<std::array<double, 6>> estimates(cfg.replications);
        std::vector<char> ok(cfg.replications, 0);
        std::atomic<std::size_t> next{0};

        auto worker = [&]() {
            for (;;) {
                const std::size_t r = next.fetch_add(1);
                if (r >= cfg.replications) return;
                // Stream id encodes (grid point, replication) so every cell
                // of the study draws from its own substream.
                RandomStream rng(cfg.seed, (grid_i << 32) | r);
                const auto pairs = sample_begled(truth, n, rng);
                try {
                    const PartitionedSample s = partition_sample(pairs, 0.0);
                    if (cfg.estimator == RecoveryEstimator::CoordinateWise) {
                        estimates[r] = coordinate_wise_estimate(s, truth_arr, cfg.sweeps);
                        ok[r] = 1;
                        continue;
                    }
                    FitConfig fit_cfg = cfg.fit;
                    fit_cfg.seed = cfg.seed ^ (r * 0x9e3779b97f4a7c15ull);
                    const FitResult fit = fit_mle(s, ModelTag::Begled, std::nullopt, fit_cfg);
                    if (!fit.converged) continue;
                    estimates[r] = to_array(fit.params);
                    ok[r] = 1;
                } catch (const fit_error&) {
                    // counted against the failure budget below
                }
            }
        };

        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        std::size_t used = 0;
        for (char c : ok) used += c;
        const std::size_t failed = cfg.replications - used;
        if (static_cast<double>(failed) >
            cfg.failure_budget * static_cast<double>(cfg.replications))
            throw fit_error("run_simulation: non-converged replication fraction " +
                            std::to_string(failed) + "/" +
                            std::to_string(cfg.replications) + " exceeds budget");

        SimulationRow row;
        row.n = n;
        row.replications_used = used;
        row.replications_failed = failed;
        for (int p = 0; p < 6; ++p) {
            std::vector<double> vals;
            vals.reserve(used);
            for (std::size_t r = 0; r < cfg.replications; ++r)
                if (ok[r]) vals.push_back(estimates[r][p]);
            std::sort(vals.begin(), vals.end());
            const double m = static_cast<double>(vals.size());
            double mean = 0.0;
            for (double v : vals) mean += v;
            mean /= m;
            double var = 0.0;
            for (double v : vals) var += (v - mean) * (v - mean);
            var /= m;  // population variance, so mse = var + bias^2 holds exactly
            SimCell& cell = row.cells[p];
            cell.truth = truth_arr[p];
            cell.mean = mean;
            cell.bias = mean - truth_arr[p];
            cell.variance = var;
            cell.mse = var + cell.bias * cell.bias;
            cell.ci_lo = percentile(vals, 0.025);
            cell.ci_hi = percentile(vals, 0.975);
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace moglib

#include "rcusum/experiments.hpp"

#include "rcusum/ecdf.hpp"
#include "rcusum/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace rcusum::sim {

std::size_t resolve_threads(std::size_t requested) {
    std::size_t workers = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RANK_CUSUM_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) workers = std::min<std::size_t>(workers, cap);
    }
    return workers;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed = true;
                }
            }
        });
    }
    pool.clear();  // joins
    if (error) std::rethrow_exception(error);
}

double model_phi(int model) {
    if (model == 1) return 0.0;
    if (model == 2) return 0.8;
    throw Error(ErrorCode::invalid_input, "model must be 1 or 2");
}

double sup_distance_to_kolmogorov(std::span<const double> sorted) {
    const double m = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double k = cptest::kolmogorov_cdf(sorted[i]);
        d = std::max({d, static_cast<double>(i + 1) / m - k, k - static_cast<double>(i) / m});
    }
    return d;
}

std::vector<ConvergenceSample> run_convergence_experiment(int model, std::span<const std::size_t> n_list,
                                                          std::size_t reps, std::uint64_t seed,
                                                          std::size_t threads) {
    const double phi = model_phi(model);
    const double known_d = std::sqrt(psi_scale_dsq(gaussian_ar1_dsq(phi)));
    const lrv::LrvConfig config{};
    const std::size_t workers = resolve_threads(threads);

    std::vector<ConvergenceSample> out;
    for (std::size_t s = 0; s < n_list.size(); ++s) {
        ConvergenceSample sample;
        sample.n = n_list[s];
        sample.estimated_d.assign(reps, 0.0);
        sample.known_d.assign(reps, 0.0);
        ScenarioSpec spec;
        spec.first_half = spec.second_half = InnovationSpec::normal(0.0);
        spec.phi = phi;
        spec.n = sample.n;

        parallel_for(reps, workers, [&](std::size_t r) {
            auto rng = substream(seed, s, r);
            const auto series = scenario_series(spec, rng);
            const auto path = corr::kendall_path(series);
            const auto proc = cptest::cusum_process(path);
            const auto psi = ecdf::psi_hat(series, path.last(), config.demean);
            const auto est = lrv::lrv_estimate(psi, config);
            sample.estimated_d[r] =
                est.d > 0.0 ? proc.t_n / (4.0 * est.d) : std::numeric_limits<double>::infinity();
            sample.known_d[r] = proc.t_n / (4.0 * known_d);
        });

        std::sort(sample.estimated_d.begin(), sample.estimated_d.end());
        std::sort(sample.known_d.begin(), sample.known_d.end());
        if (reps > 0) {
            sample.sup_distance_estimated = sup_distance_to_kolmogorov(sample.estimated_d);
            sample.sup_distance_known = sup_distance_to_kolmogorov(sample.known_d);
        }
        out.push_back(std::move(sample));
    }
    return out;
}

std::vector<JumpSpec> standard_jumps() {
    return {{"none", 0.4}, {"-.2", 0.2}, {"+.2", 0.6}, {"-.4", 0.0}, {"+.4", 0.8}, {"-.6", -0.2}, {"-.8", -0.4}};
}

std::vector<InnovationSpec> standard_distributions() {
    return {InnovationSpec::normal(0.0), InnovationSpec::student(20, 0.0), InnovationSpec::student(5, 0.0),
            InnovationSpec::student(3, 0.0), InnovationSpec::student(1, 0.0)};
}

namespace {

constexpr cptest::TestKind kTableTests[] = {cptest::TestKind::kendall, cptest::TestKind::pearson,
                                            cptest::TestKind::spearman_copula};
constexpr std::size_t kTestCount = std::size(kTableTests);

InnovationSpec with_rho(InnovationSpec spec, double rho) {
    spec.rho = rho;
    return spec;
}

}  // namespace

std::vector<RejectionTableRow> run_rejection_table(int model, std::span<const InnovationSpec> distributions,
                                                   std::span<const JumpSpec> jumps, std::size_t n,
                                                   std::size_t reps, double level, std::uint64_t seed,
                                                   std::size_t threads) {
    const double phi = model_phi(model);
    const lrv::LrvConfig config{};
    const std::size_t scenarios = distributions.size() * jumps.size();

    // outcome per (scenario, replicate, test): 0 = keep, 1 = reject, 2 = test raised
    std::vector<unsigned char> outcome(scenarios * reps * kTestCount, 0);
    parallel_for(scenarios * reps, resolve_threads(threads), [&](std::size_t item) {
        const std::size_t scenario = item / reps;
        const std::size_t r = item % reps;
        const auto& dist = distributions[scenario / jumps.size()];
        const auto& jump = jumps[scenario % jumps.size()];

        ScenarioSpec spec;
        spec.first_half = with_rho(dist, kTableRhoBefore);
        spec.second_half = with_rho(dist, jump.rho_after);
        spec.phi = phi;
        spec.n = n;
        auto rng = substream(seed, scenario, r);
        const auto series = scenario_series(spec, rng);
        for (std::size_t t = 0; t < kTestCount; ++t) {
            unsigned char result = 0;
            try {
                result = cptest::run_test(kTableTests[t], series, config, level).p_value < level ? 1 : 0;
            } catch (const Error&) {
                result = 2;
            }
            outcome[item * kTestCount + t] = result;
        }
    });

    std::vector<RejectionTableRow> rows;
    for (std::size_t d = 0; d < distributions.size(); ++d) {
        for (std::size_t t = 0; t < kTestCount; ++t) {
            RejectionTableRow row;
            row.distribution = distributions[d].label();
            row.test = kTableTests[t];
            row.replications = reps;
            row.level = level;
            for (std::size_t j = 0; j < jumps.size(); ++j) {
                const std::size_t scenario = d * jumps.size() + j;
                std::size_t rejected = 0;
                std::size_t failed = 0;
                for (std::size_t r = 0; r < reps; ++r) {
                    const auto o = outcome[(scenario * reps + r) * kTestCount + t];
                    rejected += o == 1;
                    failed += o == 2;
                }
                row.jump_labels.push_back(jumps[j].label);
                row.frequencies.push_back(reps == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(reps));
                row.failures.push_back(failed);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

cptest::ChangeModelParams implied_change_params(const InnovationSpec& before, const InnovationSpec& after,
                                                double lambda_star) {
    cptest::ChangeModelParams p;
    p.lambda_star = lambda_star;
    // Kendall's tau of any elliptical law depends on the shape alone
    p.tau_F = cptest::tau_from_rho(before.rho);
    p.tau_G = cptest::tau_from_rho(after.rho);
    if (before.family == Family::normal && after.family == Family::normal) {
        p.tau_FG = cptest::tau_from_rho(0.5 * (before.rho + after.rho));
        return p;
    }
    constexpr std::size_t kDraws = 400000;
    Rng rng(substream_seed(0x7a75fcULL, 0, 0));
    InnovationSampler f(before);
    InnovationSampler g(after);
    long long score = 0;
    for (std::size_t i = 0; i < kDraws; ++i) {
        const auto [x1, y1] = f(rng);
        const auto [x2, y2] = g(rng);
        score += ((x2 > x1) - (x2 < x1)) * ((y2 > y1) - (y2 < y1));
    }
    p.tau_FG = static_cast<double>(score) / static_cast<double>(kDraws);
    return p;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::vector<LocatorSummary> run_locator_experiment(std::span<const LocatorCell> cells, std::size_t reps,
                                                   std::uint64_t seed, std::size_t threads) {
    std::vector<LocatorSummary> out;
    const std::size_t workers = resolve_threads(threads);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = cells[c];
        LocatorSummary summary;
        summary.cell = cell;
        summary.implied = implied_change_params(cell.before, cell.after, cell.lambda_star);
        if (!cptest::identifiability_condition(summary.implied)) {
            throw Error(ErrorCode::invalid_input, "locator cell " + std::to_string(c) +
                                                      " violates the identifiability condition");
        }
        ScenarioSpec spec;
        spec.first_half = cell.before;
        spec.second_half = cell.after;
        spec.phi = cell.phi;
        spec.n = cell.n;
        spec.change_fraction = cell.lambda_star;

        std::vector<double> errors(reps, 0.0);
        parallel_for(reps, workers, [&](std::size_t r) {
            auto rng = substream(seed, c, r);
            const auto est = cptest::locate_change(scenario_series(spec, rng));
            errors[r] = std::abs(est.lambda_hat - cell.lambda_star);
        });
        std::sort(errors.begin(), errors.end());
        summary.replications = reps;
        if (reps > 0) {
            double total = 0.0;
            for (double e : errors) total += e;
            summary.mean_error = total / static_cast<double>(reps);
            summary.median_error = quantile_sorted(errors, 0.5);
            summary.q90_error = quantile_sorted(errors, 0.9);
        }
        out.push_back(std::move(summary));
    }
    return out;
}

}  // namespace rcusum::sim

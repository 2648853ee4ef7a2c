#pragma once

#include "rcusum/change_model.hpp"
#include "rcusum/cptest.hpp"
#include "rcusum/simulate.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace rcusum::sim {

/// Worker count: `requested` if non-zero, else the hardware concurrency, capped
/// by RANK_CUSUM_THREADS when that is set to a positive integer (0 = no cap).
[[nodiscard]] std::size_t resolve_threads(std::size_t requested = 0);

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

/// AR parameter of the two reference models (1: independent, 2: phi = 0.8).
[[nodiscard]] double model_phi(int model);

// Convergence of the null distribution ----------------------------------------

struct ConvergenceSample {
    std::size_t n = 0;
    std::vector<double> estimated_d;  ///< sorted T_n / (4 D_n), D_n from the HAC estimator
    std::vector<double> known_d;      ///< sorted T_n / (4 D), D from the closed form
    double sup_distance_estimated = 0.0;
    double sup_distance_known = 0.0;
};

/// Kolmogorov-Smirnov distance between the empirical CDF of `sorted` and K.
[[nodiscard]] double sup_distance_to_kolmogorov(std::span<const double> sorted);

/// Gaussian innovations with rho = 0 under the given model, no change. The
/// known D is sqrt(psi_scale_dsq(model dsq)). Replicates with D_n = 0 yield +inf.
[[nodiscard]] std::vector<ConvergenceSample> run_convergence_experiment(int model,
                                                                        std::span<const std::size_t> n_list,
                                                                        std::size_t reps, std::uint64_t seed,
                                                                        std::size_t threads = 0);

// Size and power tables ---------------------------------------------------------

struct JumpSpec {
    std::string label;  ///< "none", "-.2", ...
    double rho_after = 0.4;
};

/// Shape before the change in every table scenario.
inline constexpr double kTableRhoBefore = 0.4;

/// none, -.2, +.2, -.4, +.4, -.6, -.8 (second-half rho 0.4, 0.2, 0.6, 0, 0.8, -0.2, -0.4).
[[nodiscard]] std::vector<JumpSpec> standard_jumps();
/// normal, t20, t5, t3, t1.
[[nodiscard]] std::vector<InnovationSpec> standard_distributions();

struct RejectionTableRow {
    std::string distribution;
    cptest::TestKind test = cptest::TestKind::kendall;
    std::vector<std::string> jump_labels;
    std::vector<double> frequencies;
    std::vector<std::size_t> failures;  ///< replicates where the test raised (counted as no rejection)
    std::size_t replications = 0;
    double level = 0.05;
};

/// Every replicate runs all three tests on the same simulated series.
/// Rows are ordered distribution-major, then kendall, pearson, spearman.
[[nodiscard]] std::vector<RejectionTableRow> run_rejection_table(int model,
                                                                 std::span<const InnovationSpec> distributions,
                                                                 std::span<const JumpSpec> jumps, std::size_t n,
                                                                 std::size_t reps, double level, std::uint64_t seed,
                                                                 std::size_t threads = 0);

// Change-point locator ------------------------------------------------------------

struct LocatorCell {
    std::size_t n = 2000;
    double lambda_star = 0.5;
    InnovationSpec before = InnovationSpec::normal(0.4);
    InnovationSpec after = InnovationSpec::normal(-0.4);
    double phi = 0.0;
};

struct LocatorSummary {
    LocatorCell cell;
    cptest::ChangeModelParams implied;
    std::size_t replications = 0;
    double mean_error = 0.0;
    double median_error = 0.0;
    double q90_error = 0.0;
};

/// tau_F, tau_G and tau_FG implied by the innovation laws. Gaussian pairs use
/// the arcsine law (tau_FG from the difference Z2 - Z1, shape (rho_F + rho_G)/2);
/// for t laws tau_FG is a seeded Monte Carlo average of the kernel.
[[nodiscard]] cptest::ChangeModelParams implied_change_params(const InnovationSpec& before,
                                                              const InnovationSpec& after, double lambda_star);

/// Summary of |lambda_hat - lambda_star| per cell. Throws ErrorCode::invalid_input
/// if a cell violates identifiability_condition (including tau_F == tau_G).
[[nodiscard]] std::vector<LocatorSummary> run_locator_experiment(std::span<const LocatorCell> cells,
                                                                 std::size_t reps, std::uint64_t seed,
                                                                 std::size_t threads = 0);

}  // namespace rcusum::sim

#pragma once

#include "rcusum/corr.hpp"
#include "rcusum/kolmogorov.hpp"
#include "rcusum/lrv.hpp"
#include "rcusum/series.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace rcusum::cptest {

enum class TestKind { kendall, pearson, spearman_copula };

[[nodiscard]] std::string_view to_string(TestKind kind) noexcept;
[[nodiscard]] TestKind test_kind_from_string(std::string_view name);

/// Weighted difference process (k/sqrt(n)) |path_k - path_n| for k = k_min..n.
struct CusumProcess {
    std::size_t k_min = 1;
    std::vector<double> values;  ///< values[i] belongs to k = k_min + i
    double t_n = 0.0;            ///< max of values
    std::size_t argmax_k = 0;    ///< smallest k attaining t_n
};

/// Undefined path entries (NaN, e.g. Pearson on a constant prefix) contribute 0.
[[nodiscard]] CusumProcess cusum_process(const corr::CorrelationPath& path);

struct TestResult {
    TestKind kind = TestKind::kendall;
    double t_n = 0.0;
    double d_hat = 0.0;
    /// t_n / (4 d_hat) for Kendall, t_n / d_hat for Pearson and the copula test.
    double normalized = 0.0;
    double p_value = 1.0;
    double alpha = 0.05;
    bool reject = false;
    std::size_t k_min = 2;
    std::vector<double> process;
    std::size_t argmax_k = 0;
    std::size_t bandwidth_used = 0;
    bool negative_variance_flag = false;

    friend bool operator==(const TestResult&, const TestResult&) = default;
};

/// Smallest sample size accepted by the *_change_test functions.
inline constexpr std::size_t kMinTestSize = 20;

/**
 * CUSUM test for a change in Kendall's tau.
 *
 * Statistic T_n = max_k (k/sqrt(n)) |tau_k - tau_n| over k = 2..n, normalized
 * by 4 D_n where D_n^2 is the HAC long-run variance of ecdf::psi_hat. Under
 * no change the normalized statistic converges to sup |B| of a Brownian bridge.
 *
 * Throws ErrorCode::invalid_input (n < 20, alpha outside (0,1)) and
 * ErrorCode::degenerate_variance (D_n == 0, e.g. comonotone data).
 */
[[nodiscard]] TestResult kendall_change_test(const BivariateSeries& series, const lrv::LrvConfig& config,
                                             double alpha = 0.05);

/// CUSUM test on Pearson's prefix correlations, normalized by the HAC
/// long-run variance of the influence terms x~y~ - rho (x~^2 + y~^2)/2.
[[nodiscard]] TestResult pearson_change_test(const BivariateSeries& series, const lrv::LrvConfig& config,
                                             double alpha = 0.05);

/// CUSUM test on corr::spearman_s_path, normalized by the HAC long-run
/// variance of 12 R_n(X_i) R_n(Y_i) / n^2 - 3 - s_n.
[[nodiscard]] TestResult spearman_copula_change_test(const BivariateSeries& series,
                                                     const lrv::LrvConfig& config, double alpha = 0.05);

[[nodiscard]] TestResult run_test(TestKind kind, const BivariateSeries& series, const lrv::LrvConfig& config,
                                  double alpha = 0.05);

struct ChangePointEstimate {
    std::size_t k_hat = 0;
    double lambda_hat = 0.0;
};

/// argmax of the Kendall CUSUM process (smallest k on ties). Requires n >= 4.
[[nodiscard]] ChangePointEstimate locate_change(const BivariateSeries& series);

}  // namespace rcusum::cptest

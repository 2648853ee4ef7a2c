#pragma once

#include "rcusum/series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rcusum::ecdf {

/// (1/n) #{ j : X_j <= X_i and Y_j <= Y_i }, self included. O(n log n).
[[nodiscard]] std::vector<double> joint_ecdf_at_sample(const BivariateSeries& series);

/// Integer dominance counts behind joint_ecdf_at_sample.
[[nodiscard]] std::vector<std::int64_t> joint_dominance_counts(const BivariateSeries& series);
/// O(n^2) reference for joint_dominance_counts.
[[nodiscard]] std::vector<std::int64_t> joint_dominance_counts_naive(const BivariateSeries& series);

/// (1/n) #{ j : v_j <= v_i }.
[[nodiscard]] std::vector<double> marginal_ecdf_at_sample(std::span<const double> values);

/// Estimated influence values of Kendall's tau.
struct PsiValues {
    std::vector<double> values;
    bool demeaned = false;
    double tau_hat = 0.0;
};

/**
 * psi_i = 2 F_n(X_i, Y_i) - F_{X,n}(X_i) - F_{Y,n}(Y_i) + (1 - tau_hat) / 2
 *
 * This is half the first Hoeffding projection of the Kendall kernel, so it
 * has mean zero in the population and tau_hat - tau ~ (4/n) sum psi_i.
 * With demean == true the empirical mean is subtracted afterwards.
 */
[[nodiscard]] PsiValues psi_hat(const BivariateSeries& series, double tau_hat, bool demean = true);

}  // namespace rcusum::ecdf

#include "rcusum/ecdf.hpp"

#include "rank_util.hpp"
#include "rcusum/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rcusum::ecdf {

std::vector<std::int64_t> joint_dominance_counts(const BivariateSeries& series) {
    const auto xs = series.xs();
    const auto ys = series.ys();
    const std::size_t n = series.size();

    std::vector<std::size_t> y_rank;
    const std::size_t distinct_y = detail::dense_ranks(ys, y_rank);
    const auto order = detail::argsort(xs);

    detail::Fenwick seen(distinct_y);
    std::vector<std::int64_t> counts(n, 0);
    std::size_t group_begin = 0;
    while (group_begin < n) {
        std::size_t group_end = group_begin + 1;
        while (group_end < n && xs[order[group_end]] == xs[order[group_begin]]) ++group_end;
        // x-ties dominate each other, so insert the whole group before querying
        for (std::size_t g = group_begin; g < group_end; ++g) seen.add(y_rank[order[g]]);
        for (std::size_t g = group_begin; g < group_end; ++g) {
            counts[order[g]] = seen.prefix_sum(y_rank[order[g]]);
        }
        group_begin = group_end;
    }
    return counts;
}

std::vector<std::int64_t> joint_dominance_counts_naive(const BivariateSeries& series) {
    const auto xs = series.xs();
    const auto ys = series.ys();
    std::vector<std::int64_t> counts(series.size(), 0);
    for (std::size_t i = 0; i < series.size(); ++i) {
        for (std::size_t j = 0; j < series.size(); ++j) {
            if (xs[j] <= xs[i] && ys[j] <= ys[i]) ++counts[i];
        }
    }
    return counts;
}

std::vector<double> joint_ecdf_at_sample(const BivariateSeries& series) {
    const auto counts = joint_dominance_counts(series);
    const double n = static_cast<double>(series.size());
    std::vector<double> out(counts.size());
    std::transform(counts.begin(), counts.end(), out.begin(),
                   [n](std::int64_t c) { return static_cast<double>(c) / n; });
    return out;
}

std::vector<double> marginal_ecdf_at_sample(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(values.size());
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto le = std::upper_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin();
        out[i] = static_cast<double>(le) / n;
    }
    return out;
}

PsiValues psi_hat(const BivariateSeries& series, double tau_hat, bool demean) {
    if (!(tau_hat >= -1.0 && tau_hat <= 1.0)) {
        throw Error(ErrorCode::invalid_input, "tau_hat must lie in [-1, 1]");
    }
    const auto joint = joint_ecdf_at_sample(series);
    const auto fx = marginal_ecdf_at_sample(series.xs());
    const auto fy = marginal_ecdf_at_sample(series.ys());
    const double center = 0.5 * (1.0 - tau_hat);

    PsiValues psi;
    psi.tau_hat = tau_hat;
    psi.demeaned = demean;
    psi.values.resize(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        // fx + fy first keeps the value bit-identical when x and y swap roles
        psi.values[i] = 2.0 * joint[i] - (fx[i] + fy[i]) + center;
    }
    if (demean) {
        const double mean = std::accumulate(psi.values.begin(), psi.values.end(), 0.0) /
                            static_cast<double>(psi.values.size());
        for (double& v : psi.values) v -= mean;
    }
    return psi;
}

}  // namespace rcusum::ecdf

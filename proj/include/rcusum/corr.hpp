#pragma once

#include "rcusum/series.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace rcusum::corr {

enum class Statistic { kendall, pearson, spearman_s, spearman_r };

[[nodiscard]] std::string_view to_string(Statistic s) noexcept;

/// Pair counts behind Kendall's tau. Pairs tied in x or in y count in neither set.
struct ConcordanceCount {
    std::int64_t concordant = 0;
    std::int64_t discordant = 0;
    std::int64_t pairs = 0;

    [[nodiscard]] double tau() const noexcept {
        return static_cast<double>(concordant - discordant) / static_cast<double>(pairs);
    }
    friend bool operator==(const ConcordanceCount&, const ConcordanceCount&) = default;
};

/**
 * Per-prefix estimates of one statistic, indexed by prefix length k = k_min..n.
 *
 * Pearson prefixes with a zero-variance margin are stored as NaN and reported
 * through defined(k) == false.
 */
class CorrelationPath {
public:
    CorrelationPath(Statistic statistic, std::size_t k_min, std::vector<double> values)
        : statistic_(statistic), k_min_(k_min), values_(std::move(values)) {}

    [[nodiscard]] Statistic statistic() const noexcept { return statistic_; }
    [[nodiscard]] std::size_t k_min() const noexcept { return k_min_; }
    /// Length of the underlying series.
    [[nodiscard]] std::size_t n() const noexcept { return k_min_ + values_.size() - 1; }
    [[nodiscard]] double at(std::size_t k) const;
    [[nodiscard]] bool defined(std::size_t k) const;
    [[nodiscard]] double last() const { return values_.back(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

private:
    Statistic statistic_;
    std::size_t k_min_;
    std::vector<double> values_;
};

// Kendall's tau ---------------------------------------------------------------

/// O(n log n): sort by x, then count y-dominance with a Fenwick tree over y-ranks.
[[nodiscard]] ConcordanceCount concordance(const BivariateSeries& series);
/// O(n^2) reference count over all pairs.
[[nodiscard]] ConcordanceCount concordance_naive(const BivariateSeries& series);

[[nodiscard]] double kendall_tau(const BivariateSeries& series);
[[nodiscard]] double kendall_tau_naive(const BivariateSeries& series);

/// tau of every prefix, k = 2..n. Each added point costs O(k) comparisons.
[[nodiscard]] CorrelationPath kendall_path(const BivariateSeries& series);

// Pearson ---------------------------------------------------------------------

/// Moment correlation of every prefix via Welford co-moment updates.
[[nodiscard]] CorrelationPath pearson_path(const BivariateSeries& series);
/// Full-sample moment correlation; NaN when a margin is constant.
[[nodiscard]] double pearson(const BivariateSeries& series);

// Spearman --------------------------------------------------------------------

/// 1-based ranks, ties get the average of the positions they occupy.
[[nodiscard]] std::vector<double> midranks(std::span<const double> values);

/**
 * Prefix path of the copula-based Spearman statistic, k = 1..n:
 *
 *     s_k = 12 / (k n^2) * sum_{i<=k} R_n(X_i) R_n(Y_i) - 3 - 12/n
 *
 * Ranks R_n are taken once over the full sample, so every prefix keeps the
 * global normalization. At k = n this is the usual rank-product form.
 */
[[nodiscard]] CorrelationPath spearman_s_path(const BivariateSeries& series);

/// Spearman's rho with mid-ranks, 12/((n-1)n(n+1)) * sum (R_x - c)(R_y - c), c = (n+1)/2.
[[nodiscard]] double spearman_r(const BivariateSeries& series);

/// r_k with ranks recomputed within each prefix (R_k, not R_n), k = 2..n.
[[nodiscard]] CorrelationPath spearman_r_path(const BivariateSeries& series);

}  // namespace rcusum::corr

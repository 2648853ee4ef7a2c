#include "rcusum/corr.hpp"

#include "rank_util.hpp"
#include "rcusum/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rcusum::corr {

std::string_view to_string(Statistic s) noexcept {
    switch (s) {
        case Statistic::kendall: return "kendall";
        case Statistic::pearson: return "pearson";
        case Statistic::spearman_s: return "spearman_s";
        case Statistic::spearman_r: return "spearman_r";
    }
    return "unknown";
}

double CorrelationPath::at(std::size_t k) const {
    if (k < k_min_ || k > n()) {
        throw Error(ErrorCode::invalid_input, "path index " + std::to_string(k) + " out of range");
    }
    return values_[k - k_min_];
}

bool CorrelationPath::defined(std::size_t k) const { return !std::isnan(at(k)); }

namespace {

int sign_of_difference(double a, double b) { return (a > b) - (a < b); }

void require_two(const BivariateSeries& series) {
    if (series.size() < 2) throw Error(ErrorCode::invalid_input, "correlation needs at least two observations");
}

std::int64_t pair_count(std::size_t n) {
    const auto m = static_cast<std::int64_t>(n);
    return m * (m - 1) / 2;
}

}  // namespace

ConcordanceCount concordance(const BivariateSeries& series) {
    require_two(series);
    const auto xs = series.xs();
    const auto ys = series.ys();
    const std::size_t n = series.size();

    std::vector<std::size_t> y_rank;
    const std::size_t distinct_y = detail::dense_ranks(ys, y_rank);
    const auto order = detail::argsort(xs);

    detail::Fenwick below(distinct_y);
    ConcordanceCount count;
    count.pairs = pair_count(n);
    std::int64_t inserted = 0;

    // Points with equal x form a group: query the whole group against strictly
    // smaller x before inserting any member, so x-ties count in neither set.
    std::size_t group_begin = 0;
    while (group_begin < n) {
        std::size_t group_end = group_begin + 1;
        while (group_end < n && xs[order[group_end]] == xs[order[group_begin]]) ++group_end;

        for (std::size_t g = group_begin; g < group_end; ++g) {
            const std::size_t r = y_rank[order[g]];
            const std::int64_t less = r == 0 ? 0 : below.prefix_sum(r - 1);
            const std::int64_t less_or_equal = below.prefix_sum(r);
            count.concordant += less;
            count.discordant += inserted - less_or_equal;
        }
        for (std::size_t g = group_begin; g < group_end; ++g) below.add(y_rank[order[g]]);
        inserted += static_cast<std::int64_t>(group_end - group_begin);
        group_begin = group_end;
    }
    return count;
}

ConcordanceCount concordance_naive(const BivariateSeries& series) {
    require_two(series);
    const auto xs = series.xs();
    const auto ys = series.ys();
    ConcordanceCount count;
    count.pairs = pair_count(series.size());
    for (std::size_t j = 1; j < series.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const int s = sign_of_difference(xs[j], xs[i]) * sign_of_difference(ys[j], ys[i]);
            if (s > 0) ++count.concordant;
            else if (s < 0) ++count.discordant;
        }
    }
    return count;
}

double kendall_tau(const BivariateSeries& series) { return concordance(series).tau(); }

double kendall_tau_naive(const BivariateSeries& series) { return concordance_naive(series).tau(); }

CorrelationPath kendall_path(const BivariateSeries& series) {
    require_two(series);
    const auto xs = series.xs();
    const auto ys = series.ys();
    const std::size_t n = series.size();

    std::vector<double> values;
    values.reserve(n - 1);
    std::int64_t score = 0;  // concordant - discordant among the first k points
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < k; ++i) {
            score += sign_of_difference(xs[k], xs[i]) * sign_of_difference(ys[k], ys[i]);
        }
        values.push_back(static_cast<double>(score) / static_cast<double>(pair_count(k + 1)));
    }
    return CorrelationPath(Statistic::kendall, 2, std::move(values));
}

CorrelationPath pearson_path(const BivariateSeries& series) {
    require_two(series);
    const auto xs = series.xs();
    const auto ys = series.ys();
    const std::size_t n = series.size();

    std::vector<double> values;
    values.reserve(n - 1);
    double mean_x = 0.0;
    double mean_y = 0.0;
    double m2x = 0.0;
    double m2y = 0.0;
    double cxy = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double dx = xs[k - 1] - mean_x;
        const double dy = ys[k - 1] - mean_y;
        const double kk = static_cast<double>(k);
        mean_x += dx / kk;
        mean_y += dy / kk;
        m2x += dx * (xs[k - 1] - mean_x);
        m2y += dy * (ys[k - 1] - mean_y);
        cxy += dx * (ys[k - 1] - mean_y);
        if (k < 2) continue;
        if (m2x > 0.0 && m2y > 0.0) {
            values.push_back(std::clamp(cxy / std::sqrt(m2x * m2y), -1.0, 1.0));
        } else {
            values.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    return CorrelationPath(Statistic::pearson, 2, std::move(values));
}

double pearson(const BivariateSeries& series) { return pearson_path(series).last(); }

std::vector<double> midranks(std::span<const double> values) {
    const auto order = detail::argsort(values);
    std::vector<double> ranks(values.size());
    std::size_t begin = 0;
    while (begin < order.size()) {
        std::size_t end = begin + 1;
        while (end < order.size() && values[order[end]] == values[order[begin]]) ++end;
        // positions begin..end-1 (0-based) -> average 1-based rank
        const double rank = 0.5 * static_cast<double>(begin + end + 1);
        for (std::size_t i = begin; i < end; ++i) ranks[order[i]] = rank;
        begin = end;
    }
    return ranks;
}

CorrelationPath spearman_s_path(const BivariateSeries& series) {
    const std::size_t n = series.size();
    const auto rx = midranks(series.xs());
    const auto ry = midranks(series.ys());
    const double nn = static_cast<double>(n);

    std::vector<double> values;
    values.reserve(n);
    double sum = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        sum += rx[k - 1] * ry[k - 1];
        values.push_back(12.0 * sum / (static_cast<double>(k) * nn * nn) - 3.0 - 12.0 / nn);
    }
    return CorrelationPath(Statistic::spearman_s, 1, std::move(values));
}

namespace {

double spearman_from_ranks(std::span<const double> rx, std::span<const double> ry) {
    const std::size_t n = rx.size();
    const double center = 0.5 * static_cast<double>(n + 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += (rx[i] - center) * (ry[i] - center);
    const double nn = static_cast<double>(n);
    return 12.0 * sum / ((nn - 1.0) * nn * (nn + 1.0));
}

}  // namespace

double spearman_r(const BivariateSeries& series) {
    require_two(series);
    const auto rx = midranks(series.xs());
    const auto ry = midranks(series.ys());
    return spearman_from_ranks(rx, ry);
}

CorrelationPath spearman_r_path(const BivariateSeries& series) {
    require_two(series);
    const auto xs = series.xs();
    const auto ys = series.ys();
    const std::size_t n = series.size();

    std::vector<double> rx;
    std::vector<double> ry;
    rx.reserve(n);
    ry.reserve(n);
    std::vector<double> values;
    values.reserve(n - 1);

    // Inserting a value shifts existing mid-ranks by 1 (new value smaller) or
    // 1/2 (tied); the new point gets 1 + #smaller + #tied/2.
    const auto insert = [](std::vector<double>& ranks, std::span<const double> data, std::size_t k) {
        const double v = data[k];
        double smaller = 0.0;
        double tied = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (v < data[i]) ranks[i] += 1.0;
            else if (v == data[i]) { ranks[i] += 0.5; tied += 1.0; }
            else smaller += 1.0;
        }
        ranks.push_back(1.0 + smaller + 0.5 * tied);
    };

    for (std::size_t k = 0; k < n; ++k) {
        insert(rx, xs, k);
        insert(ry, ys, k);
        if (k >= 1) values.push_back(spearman_from_ranks(rx, ry));
    }
    return CorrelationPath(Statistic::spearman_r, 2, std::move(values));
}

}  // namespace rcusum::corr

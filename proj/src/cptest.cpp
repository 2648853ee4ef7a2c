#include "rcusum/cptest.hpp"

#include "rcusum/ecdf.hpp"
#include "rcusum/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rcusum::cptest {

std::string_view to_string(TestKind kind) noexcept {
    switch (kind) {
        case TestKind::kendall: return "kendall";
        case TestKind::pearson: return "pearson";
        case TestKind::spearman_copula: return "spearman";
    }
    return "unknown";
}

TestKind test_kind_from_string(std::string_view name) {
    if (name == "kendall") return TestKind::kendall;
    if (name == "pearson") return TestKind::pearson;
    if (name == "spearman" || name == "spearman_copula" || name == "copula") return TestKind::spearman_copula;
    throw Error(ErrorCode::invalid_input, "unknown statistic '" + std::string(name) + "'");
}

CusumProcess cusum_process(const corr::CorrelationPath& path) {
    const std::size_t n = path.n();
    const double root_n = std::sqrt(static_cast<double>(n));
    const double last = path.last();

    CusumProcess proc;
    proc.k_min = path.k_min();
    proc.values.reserve(n - proc.k_min + 1);
    proc.argmax_k = proc.k_min;
    for (std::size_t k = proc.k_min; k <= n; ++k) {
        const double v = path.at(k);
        double w = 0.0;
        if (!std::isnan(v) && !std::isnan(last)) w = static_cast<double>(k) / root_n * std::abs(v - last);
        proc.values.push_back(w);
        if (w > proc.t_n) {
            proc.t_n = w;
            proc.argmax_k = k;
        }
    }
    return proc;
}

namespace {

void check_inputs(const BivariateSeries& series, double alpha) {
    if (series.size() < kMinTestSize) {
        throw Error(ErrorCode::invalid_input, "change-point tests need n >= " + std::to_string(kMinTestSize) +
                                                  ", got " + std::to_string(series.size()));
    }
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::invalid_input, "alpha must lie in (0, 1)");
}

TestResult assemble(TestKind kind, const CusumProcess& proc, const lrv::LrvEstimate& lrv, double scale,
                    double alpha) {
    if (!(lrv.d > 0.0)) {
        throw Error(ErrorCode::degenerate_variance,
                    std::string(to_string(kind)) + " test: long-run variance estimate is zero");
    }
    TestResult r;
    r.kind = kind;
    r.t_n = proc.t_n;
    r.d_hat = lrv.d;
    r.normalized = proc.t_n / (scale * lrv.d);
    r.p_value = kolmogorov_sf(r.normalized);
    r.alpha = alpha;
    r.reject = r.p_value < alpha;
    r.k_min = proc.k_min;
    r.process = proc.values;
    r.argmax_k = proc.argmax_k;
    r.bandwidth_used = lrv.bandwidth_used;
    r.negative_variance_flag = lrv.negative_flag;
    return r;
}

void maybe_demean(std::vector<double>& v, bool demean) {
    if (demean) lrv::demean(v);
}

}  // namespace

TestResult kendall_change_test(const BivariateSeries& series, const lrv::LrvConfig& config, double alpha) {
    check_inputs(series, alpha);
    const auto path = corr::kendall_path(series);
    const auto proc = cusum_process(path);
    const auto psi = ecdf::psi_hat(series, path.last(), config.demean);
    const auto est = lrv::lrv_estimate(psi, config);
    // tau_k - tau has influence function 4 psi
    return assemble(TestKind::kendall, proc, est, 4.0, alpha);
}

TestResult pearson_change_test(const BivariateSeries& series, const lrv::LrvConfig& config, double alpha) {
    check_inputs(series, alpha);
    const auto path = corr::pearson_path(series);
    const double rho = path.last();
    if (std::isnan(rho)) {
        throw Error(ErrorCode::degenerate_variance, "pearson test: a margin has zero variance");
    }

    const auto xs = series.xs();
    const auto ys = series.ys();
    const std::size_t n = series.size();
    const double nn = static_cast<double>(n);
    const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / nn;
    const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / nn;
    double var_x = 0.0;
    double var_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        var_x += (xs[i] - mean_x) * (xs[i] - mean_x);
        var_y += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    const double sd_x = std::sqrt(var_x / nn);
    const double sd_y = std::sqrt(var_y / nn);
    if (!(sd_x > 0.0 && sd_y > 0.0)) {
        throw Error(ErrorCode::degenerate_variance, "pearson test: a margin has zero variance");
    }

    std::vector<double> influence(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (xs[i] - mean_x) / sd_x;
        const double v = (ys[i] - mean_y) / sd_y;
        influence[i] = u * v - 0.5 * rho * (u * u + v * v);
    }
    maybe_demean(influence, config.demean);
    const auto est = lrv::lrv_estimate(influence, config);
    return assemble(TestKind::pearson, cusum_process(path), est, 1.0, alpha);
}

TestResult spearman_copula_change_test(const BivariateSeries& series, const lrv::LrvConfig& config,
                                       double alpha) {
    check_inputs(series, alpha);
    const auto path = corr::spearman_s_path(series);
    const auto rx = corr::midranks(series.xs());
    const auto ry = corr::midranks(series.ys());
    const double nn = static_cast<double>(series.size());
    const double s_n = path.last();
    const auto constant = [](const std::vector<double>& r) {
        return std::all_of(r.begin(), r.end(), [&](double v) { return v == r.front(); });
    };
    if (constant(rx) && constant(ry)) {
        throw Error(ErrorCode::degenerate_variance, "both margins are constant");
    }

    std::vector<double> influence(series.size());
    for (std::size_t i = 0; i < influence.size(); ++i) {
        influence[i] = 12.0 * (rx[i] / nn) * (ry[i] / nn) - 3.0 - s_n;
    }
    maybe_demean(influence, config.demean);
    const auto est = lrv::lrv_estimate(influence, config);
    return assemble(TestKind::spearman_copula, cusum_process(path), est, 1.0, alpha);
}

TestResult run_test(TestKind kind, const BivariateSeries& series, const lrv::LrvConfig& config, double alpha) {
    switch (kind) {
        case TestKind::kendall: return kendall_change_test(series, config, alpha);
        case TestKind::pearson: return pearson_change_test(series, config, alpha);
        case TestKind::spearman_copula: return spearman_copula_change_test(series, config, alpha);
    }
    throw Error(ErrorCode::invalid_input, "unknown test kind");
}

ChangePointEstimate locate_change(const BivariateSeries& series) {
    if (series.size() < 4) throw Error(ErrorCode::invalid_input, "locating a change needs n >= 4");
    const auto proc = cusum_process(corr::kendall_path(series));
    return {proc.argmax_k, static_cast<double>(proc.argmax_k) / static_cast<double>(series.size())};
}

}  // namespace rcusum::cptest

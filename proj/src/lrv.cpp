#include "rcusum/lrv.hpp"

#include "rcusum/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rcusum::lrv {

std::string_view to_string(KernelKind kind) noexcept {
    return kind == KernelKind::quartic ? "quartic" : "bartlett";
}

KernelKind kernel_from_string(std::string_view name) {
    if (name == "quartic") return KernelKind::quartic;
    if (name == "bartlett") return KernelKind::bartlett;
    throw Error(ErrorCode::invalid_input, "unknown kernel '" + std::string(name) + "'");
}

double kernel_quartic(double x) {
    if (!(x >= 0.0)) throw Error(ErrorCode::invalid_input, "kernel argument must be non-negative");
    if (x > 1.0) return 0.0;
    const double u = 1.0 - x * x;
    return u * u;
}

double kernel_bartlett(double x) {
    if (!(x >= 0.0)) throw Error(ErrorCode::invalid_input, "kernel argument must be non-negative");
    return x < 1.0 ? 1.0 - x : 0.0;
}

std::size_t default_bandwidth(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::invalid_input, "bandwidth rule needs n >= 2");
    // largest b with b^3 <= 8n, i.e. b <= 2 n^{1/3}
    const unsigned long long limit = 8ULL * n;
    auto b = static_cast<unsigned long long>(std::floor(2.0 * std::cbrt(static_cast<double>(n))));
    while ((b + 1) * (b + 1) * (b + 1) <= limit) ++b;
    while (b > 0 && b * b * b > limit) --b;
    return b < 1 ? 1 : static_cast<std::size_t>(b);
}

void demean(std::span<double> values) {
    if (values.empty()) return;
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    for (double& v : values) v -= mean;
}

LrvEstimate lrv_estimate(std::span<const double> values, const LrvConfig& config) {
    const std::size_t n = values.size();
    if (n < 2) throw Error(ErrorCode::invalid_input, "long-run variance needs at least 2 values");
    const std::size_t b = config.bandwidth.value_or(default_bandwidth(n));
    if (b < 1 || b > n - 1) {
        throw Error(ErrorCode::invalid_input,
                    "bandwidth " + std::to_string(b) + " outside [1, " + std::to_string(n - 1) + "]");
    }

    const double nn = static_cast<double>(n);
    const double bb = static_cast<double>(b);
    double lag0 = 0.0;
    for (double v : values) lag0 += v * v;
    lag0 /= nn;

    double lags = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double x = static_cast<double>(j) / bb;
        if (x > 1.0) break;  // both kernels are supported on [0, 1]
        const double w = config.kernel(x);
        if (w == 0.0) continue;
        double s = 0.0;
        for (std::size_t i = 0; i + j < n; ++i) s += values[i] * values[i + j];
        lags += w * s;
    }

    LrvEstimate est;
    est.bandwidth_used = b;
    est.wide_bandwidth = bb > std::sqrt(nn);
    est.d_squared = lag0 + 2.0 * lags / nn;
    if (est.d_squared <= 0.0) {
        if (config.fallback == NegativeFallback::error) {
            throw Error(ErrorCode::negative_variance, "long-run variance estimate is not positive");
        }
        est.negative_flag = true;
        est.d_squared = lag0;
    }
    est.d = std::sqrt(std::max(est.d_squared, 0.0));
    return est;
}

}  // namespace rcusum::lrv

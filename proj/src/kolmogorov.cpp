#include "rcusum/kolmogorov.hpp"

#include "rcusum/error.hpp"

#include <cmath>
#include <numbers>

namespace rcusum::cptest {

namespace {

constexpr double kTermTolerance = 1e-12;
constexpr int kMaxTerms = 10000;

// 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2); accurate for x >= 1
double alternating_tail(double x) {
    double sum = 0.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const double kk = static_cast<double>(k);
        const double term = std::exp(-2.0 * kk * kk * x * x);
        sum += (k % 2 == 1) ? term : -term;
        if (term < kTermTolerance * std::abs(sum) || term == 0.0) break;
    }
    return 2.0 * sum;
}

// sqrt(2 pi)/x sum_{k>=1} exp(-(2k-1)^2 pi^2 / (8 x^2)); accurate for small x
double theta_series(double x) {
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    double sum = 0.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double term = std::exp(-odd * odd * c);
        sum += term;
        if (term <= kTermTolerance * sum) break;
    }
    return std::sqrt(2.0 * std::numbers::pi) / x * sum;
}

constexpr double kSeriesSwitch = 1.0;

}  // namespace

double kolmogorov_cdf(double x) {
    if (!(x > 0.0)) return 0.0;
    if (x < kSeriesSwitch) return theta_series(x);
    return 1.0 - alternating_tail(x);
}

double kolmogorov_sf(double x) {
    if (!(x > 0.0)) return 1.0;
    if (x < kSeriesSwitch) return 1.0 - theta_series(x);
    return alternating_tail(x);
}

double kolmogorov_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::invalid_input, "Kolmogorov quantile needs 0 < p < 1");
    }
    double lo = 0.0;
    double hi = 5.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (kolmogorov_cdf(mid) < p) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace rcusum::cptest

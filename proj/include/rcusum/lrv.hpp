#pragma once

#include "rcusum/ecdf.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace rcusum::lrv {

enum class KernelKind { quartic, bartlett };

[[nodiscard]] std::string_view to_string(KernelKind kind) noexcept;
[[nodiscard]] KernelKind kernel_from_string(std::string_view name);

/// (1 - x^2)^2 on [0, 1], zero beyond. Throws for x < 0.
[[nodiscard]] double kernel_quartic(double x);
/// max(1 - x, 0). Throws for x < 0.
[[nodiscard]] double kernel_bartlett(double x);

/// Lag-window weight. Both supplied kernels vanish for x >= 1.
struct KernelSpec {
    KernelKind kind = KernelKind::quartic;

    [[nodiscard]] double operator()(double x) const {
        return kind == KernelKind::quartic ? kernel_quartic(x) : kernel_bartlett(x);
    }
};

/// floor(2 n^{1/3}), at least 1. Exact integer arithmetic, no cube-root rounding.
[[nodiscard]] std::size_t default_bandwidth(std::size_t n);

enum class NegativeFallback { clamp_to_lag0, error };

struct LrvConfig {
    KernelSpec kernel{};
    std::optional<std::size_t> bandwidth;  ///< nullopt selects default_bandwidth(n)
    bool demean = true;                    ///< demean influence values before summing
    NegativeFallback fallback = NegativeFallback::clamp_to_lag0;
};

struct LrvEstimate {
    double d_squared = 0.0;
    double d = 0.0;
    bool negative_flag = false;     ///< raw quadratic form was <= 0
    std::size_t bandwidth_used = 0;
    bool wide_bandwidth = false;    ///< bandwidth exceeds sqrt(n)
};

/**
 * HAC long-run variance of a sequence v_1..v_n:
 *
 *     (1/n) sum v_i^2 + (2/n) sum_{j=1}^{n-1} kappa(j/b) sum_{i=1}^{n-j} v_i v_{i+j}
 *
 * The 1/n normalization is used for every lag. Values are taken as given;
 * demeaning is the producer's job (see ecdf::psi_hat).
 *
 * If the result is <= 0 the configured fallback applies: either clamp to the
 * lag-0 term (negative_flag set) or throw ErrorCode::negative_variance.
 * Throws ErrorCode::invalid_input when n < 2 or the bandwidth is outside [1, n-1].
 */
[[nodiscard]] LrvEstimate lrv_estimate(std::span<const double> values, const LrvConfig& config);

[[nodiscard]] inline LrvEstimate lrv_estimate(const ecdf::PsiValues& psi, const LrvConfig& config) {
    return lrv_estimate(std::span<const double>(psi.values), config);
}

/// Subtracts the arithmetic mean in place.
void demean(std::span<double> values);

}  // namespace rcusum::lrv

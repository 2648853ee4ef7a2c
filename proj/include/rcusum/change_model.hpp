#pragma once

#include <cstddef>

namespace rcusum::cptest {

/// Single change at fraction lambda_star from distribution F to G.
/// tau_FG is E h(Z1, Z2) for independent Z1 ~ F, Z2 ~ G.
struct ChangeModelParams {
    double lambda_star = 0.5;
    double tau_F = 0.0;
    double tau_G = 0.0;
    double tau_FG = 0.0;
};

/// E tau_k under the change model with independent observations:
/// tau_F for k <= m = floor(lambda_star n), otherwise
/// [m(m-1) tau_F + (k-m)(k-m-1) tau_G + 2m(k-m) tau_FG] / (k(k-1)).
[[nodiscard]] double mean_tau_prefix(std::size_t k, std::size_t n, const ChangeModelParams& params);

/// Continuum limit of t(lambda) = E tau_{floor(lambda n)}.
[[nodiscard]] double mean_tau_limit(double lambda, const ChangeModelParams& params);

/// Limit of the mean CUSUM difference, c(lambda) = lambda (t(lambda) - t(1)).
[[nodiscard]] double c_lambda(double lambda, const ChangeModelParams& params);

/// (1-l)^2 / (2((1-l)^2 + l)) <= (tau_FG - tau_F)/(tau_G - tau_F) < 1 with l = lambda_star.
/// Throws ErrorCode::invalid_input when tau_F == tau_G.
[[nodiscard]] bool identifiability_condition(const ChangeModelParams& params);

/// Asymptotic variance of the moment correlation at the bivariate normal: (1 - rho^2)^2.
[[nodiscard]] double asv_pearson_normal(double rho);
/// Asymptotic variance of sin(pi tau_n / 2) at the bivariate normal:
/// (1 - rho^2)(pi^2/9 - 4 arcsin^2(rho/2)).
[[nodiscard]] double asv_kendall_normal(double rho);

/// sin(pi tau / 2): moment correlation of an elliptical law with Kendall's tau `tau`.
/// Kendall's tau is taken in the difference form (0 at independence); in the
/// concordance-probability form p = (1 + tau)/2 the same law reads p = arcsin(rho)/pi + 1/2.
[[nodiscard]] double rho_from_tau(double tau);
/// (2/pi) arcsin(rho), the inverse of rho_from_tau.
[[nodiscard]] double tau_from_rho(double rho);

}  // namespace rcusum::cptest

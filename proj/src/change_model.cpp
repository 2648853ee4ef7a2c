#include "rcusum/change_model.hpp"

#include "rcusum/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rcusum::cptest {

namespace {

void check_params(const ChangeModelParams& p) {
    if (!(p.lambda_star > 0.0 && p.lambda_star < 1.0)) {
        throw Error(ErrorCode::invalid_input, "lambda_star must lie in (0, 1)");
    }
}

void check_correlation(double v, const char* what) {
    if (!(v >= -1.0 && v <= 1.0)) throw Error(ErrorCode::invalid_input, std::string(what) + " must lie in [-1, 1]");
}

}  // namespace

double mean_tau_prefix(std::size_t k, std::size_t n, const ChangeModelParams& params) {
    check_params(params);
    if (k < 2 || k > n) throw Error(ErrorCode::invalid_input, "mean_tau_prefix needs 2 <= k <= n");
    const auto m = static_cast<std::size_t>(std::floor(params.lambda_star * static_cast<double>(n)));
    if (k <= m) return params.tau_F;
    const double mm = static_cast<double>(m);
    const double kk = static_cast<double>(k);
    const double after = kk - mm;
    return (mm * (mm - 1.0) * params.tau_F + after * (after - 1.0) * params.tau_G +
            2.0 * mm * after * params.tau_FG) /
           (kk * (kk - 1.0));
}

double mean_tau_limit(double lambda, const ChangeModelParams& params) {
    check_params(params);
    const double ls = params.lambda_star;
    if (lambda <= ls) return params.tau_F;
    const double after = lambda - ls;
    return (ls * ls * params.tau_F + after * after * params.tau_G + 2.0 * ls * after * params.tau_FG) /
           (lambda * lambda);
}

double c_lambda(double lambda, const ChangeModelParams& params) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorCode::invalid_input, "lambda must lie in [0, 1]");
    return lambda * (mean_tau_limit(lambda, params) - mean_tau_limit(1.0, params));
}

bool identifiability_condition(const ChangeModelParams& params) {
    check_params(params);
    if (params.tau_F == params.tau_G) {
        throw Error(ErrorCode::invalid_input, "identifiability needs tau_F != tau_G");
    }
    const double ls = params.lambda_star;
    const double lower = (1.0 - ls) * (1.0 - ls) / (2.0 * ((1.0 - ls) * (1.0 - ls) + ls));
    const double ratio = (params.tau_FG - params.tau_F) / (params.tau_G - params.tau_F);
    return lower <= ratio && ratio < 1.0;
}

double asv_pearson_normal(double rho) {
    check_correlation(rho, "rho");
    const double u = 1.0 - rho * rho;
    return u * u;
}

double asv_kendall_normal(double rho) {
    check_correlation(rho, "rho");
    const double a = std::asin(rho / 2.0);
    return (1.0 - rho * rho) * (std::numbers::pi * std::numbers::pi / 9.0 - 4.0 * a * a);
}

double rho_from_tau(double tau) {
    check_correlation(tau, "tau");
    return std::sin(std::numbers::pi * tau / 2.0);
}

double tau_from_rho(double rho) {
    check_correlation(rho, "rho");
    return 2.0 / std::numbers::pi * std::asin(rho);
}

}  // namespace rcusum::cptest

#include "rcusum/simulate.hpp"

#include "rcusum/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace rcusum::sim {

std::string InnovationSpec::label() const {
    if (family == Family::normal) return "normal";
    const double rounded = std::round(df);
    if (rounded == df) return "t" + std::to_string(static_cast<long long>(rounded));
    return "t" + std::to_string(df);
}

InnovationSpec innovation_from_label(const std::string& label, double rho) {
    if (label == "normal") return InnovationSpec::normal(rho);
    if (label.size() > 1 && label[0] == 't') {
        try {
            std::size_t used = 0;
            const double df = std::stod(label.substr(1), &used);
            if (used == label.size() - 1 && df > 0.0) return InnovationSpec::student(df, rho);
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::invalid_input, "unknown innovation distribution '" + label + "'");
}

namespace {

void check_spec(const InnovationSpec& spec) {
    if (!(spec.rho >= -1.0 && spec.rho <= 1.0)) throw Error(ErrorCode::invalid_input, "shape rho must lie in [-1, 1]");
    if (spec.family == Family::t && !(spec.df > 0.0)) {
        throw Error(ErrorCode::invalid_input, "t innovations need df > 0");
    }
}

}  // namespace

InnovationSampler::InnovationSampler(const InnovationSpec& spec)
    : spec_(spec),
      cross_(std::sqrt(std::max(0.0, 1.0 - spec.rho * spec.rho))),
      chi2_(spec.family == Family::t ? spec.df : 1.0) {
    check_spec(spec);
}

std::pair<double, double> InnovationSampler::operator()(Rng& rng) {
    const double z1 = normal_(rng);
    const double z2 = normal_(rng);
    double x = z1;
    double y = spec_.rho * z1 + cross_ * z2;
    if (spec_.family == Family::t) {
        const double scale = 1.0 / std::sqrt(chi2_(rng) / spec_.df);
        x *= scale;
        y *= scale;
    }
    return {x, y};
}

BivariateSeries sample_innovations(const InnovationSpec& spec, std::size_t n, Rng& rng) {
    InnovationSampler draw(spec);
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) std::tie(xs[i], ys[i]) = draw(rng);
    return BivariateSeries(std::move(xs), std::move(ys));
}

BivariateSeries ar1_filter(const BivariateSeries& innovations, double phi, std::size_t burn_in) {
    if (!(std::abs(phi) < 1.0)) throw Error(ErrorCode::invalid_input, "AR parameter must satisfy |phi| < 1");
    if (innovations.size() < burn_in + 2) {
        throw Error(ErrorCode::invalid_input, "innovation stream shorter than burn-in + 2");
    }
    const auto dx = innovations.xs();
    const auto dy = innovations.ys();
    const std::size_t n = innovations.size() - burn_in;
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    double x = 0.0;
    double y = 0.0;
    for (std::size_t i = 0; i < innovations.size(); ++i) {
        x = phi * x + dx[i];
        y = phi * y + dy[i];
        if (i >= burn_in) {
            xs[i - burn_in] = x;
            ys[i - burn_in] = y;
        }
    }
    return BivariateSeries(std::move(xs), std::move(ys));
}

BivariateSeries scenario_series(const ScenarioSpec& spec, Rng& rng) {
    if (spec.n < 4) throw Error(ErrorCode::invalid_input, "scenario needs n >= 4");
    if (!(spec.change_fraction > 0.0 && spec.change_fraction < 1.0)) {
        throw Error(ErrorCode::invalid_input, "change fraction must lie in (0, 1)");
    }
    const std::size_t total = spec.n + spec.burn_in;
    const auto m = static_cast<std::size_t>(std::floor(spec.change_fraction * static_cast<double>(spec.n)));
    const std::size_t switch_at = spec.burn_in + m;  // first innovation of the second law

    InnovationSampler before(spec.first_half);
    InnovationSampler after(spec.second_half);
    std::vector<double> xs(total);
    std::vector<double> ys(total);
    for (std::size_t i = 0; i < total; ++i) {
        std::tie(xs[i], ys[i]) = i < switch_at ? before(rng) : after(rng);
    }
    return ar1_filter(BivariateSeries(std::move(xs), std::move(ys)), spec.phi, spec.burn_in);
}

BivariateSeries scenario_series(const ScenarioSpec& spec) {
    Rng rng(spec.seed);
    return scenario_series(spec, rng);
}

double gaussian_ar1_dsq(double phi) {
    if (!(std::abs(phi) < 1.0)) throw Error(ErrorCode::invalid_input, "AR parameter must satisfy |phi| < 1");
    double sum = 0.0;
    double power = phi;
    for (int j = 1; j < 100000; ++j) {
        const double a = std::asin(power / 2.0);
        const double term = a * a;
        if (term < 1e-16) break;
        sum += term;
        power *= phi;
    }
    return 1.0 / 9.0 + 8.0 / (std::numbers::pi * std::numbers::pi) * sum;
}

double model1_dsq() { return gaussian_ar1_dsq(0.0); }

double model2_dsq() { return gaussian_ar1_dsq(0.8); }

}  // namespace rcusum::sim

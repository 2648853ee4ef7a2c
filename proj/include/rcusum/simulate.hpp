#pragma once

#include "rcusum/rng.hpp"
#include "rcusum/series.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>

namespace rcusum::sim {

enum class Family { normal, t };

/// Centered bivariate elliptical law with shape matrix [[1, rho], [rho, 1]].
struct InnovationSpec {
    Family family = Family::normal;
    double df = 0.0;  ///< degrees of freedom, t only (1 = Cauchy)
    double rho = 0.0;

    [[nodiscard]] static InnovationSpec normal(double rho) { return {Family::normal, 0.0, rho}; }
    [[nodiscard]] static InnovationSpec student(double df, double rho) { return {Family::t, df, rho}; }
    /// "normal", "t5", ...
    [[nodiscard]] std::string label() const;
};

/// Parses "normal" or "t<df>" (e.g. "t1", "t20") with the given shape.
[[nodiscard]] InnovationSpec innovation_from_label(const std::string& label, double rho);

/// Draws one innovation pair at a time. Normal pairs come from the Cholesky
/// factor of the shape matrix; t pairs divide a normal pair by sqrt(W/df)
/// with a single chi-square draw W shared by both components.
class InnovationSampler {
public:
    explicit InnovationSampler(const InnovationSpec& spec);

    std::pair<double, double> operator()(Rng& rng);

private:
    InnovationSpec spec_;
    double cross_;  // sqrt(1 - rho^2)
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::chi_squared_distribution<double> chi2_;
};

[[nodiscard]] BivariateSeries sample_innovations(const InnovationSpec& spec, std::size_t n, Rng& rng);

inline constexpr std::size_t kDefaultBurnIn = 1000;

/// (X_i, Y_i) = phi (X_{i-1}, Y_{i-1}) + innovation_i from (0, 0); the first
/// burn_in outputs are discarded. Throws for |phi| >= 1 or too short input.
[[nodiscard]] BivariateSeries ar1_filter(const BivariateSeries& innovations, double phi, std::size_t burn_in);

struct ScenarioSpec {
    InnovationSpec first_half = InnovationSpec::normal(0.4);
    InnovationSpec second_half = InnovationSpec::normal(0.4);
    double phi = 0.0;
    std::size_t n = 500;
    double change_fraction = 0.5;
    std::size_t burn_in = kDefaultBurnIn;
    std::uint64_t seed = 0;
};

/// Observations 1..m (m = floor(change_fraction n)) are driven by first-half
/// innovations, the rest by second-half ones; the burn-in uses the first-half
/// law. One AR(1) recursion runs over the whole innovation stream, so under
/// phi != 0 the observed correlation moves gradually after the switch.
[[nodiscard]] BivariateSeries scenario_series(const ScenarioSpec& spec, Rng& rng);
/// Same, with the generator seeded from spec.seed.
[[nodiscard]] BivariateSeries scenario_series(const ScenarioSpec& spec);

/// Long-run variance of the Kendall kernel's first Hoeffding projection
/// h1 = 4F - 2F_X - 2F_Y + 1 - tau for a Gaussian AR(1) pair with independent
/// margins: 1/9 + (8/pi^2) sum_{j>=1} arcsin^2(phi^j / 2).
[[nodiscard]] double gaussian_ar1_dsq(double phi);
/// phi = 0: exactly 1/9.
[[nodiscard]] double model1_dsq();
/// phi = 0.8.
[[nodiscard]] double model2_dsq();

/// psi = h1/2, so the long-run variance of psi (the D^2 that pairs with the
/// T_n/(4 D) normalization) is a quarter of the h1 value.
[[nodiscard]] inline double psi_scale_dsq(double h1_dsq) { return h1_dsq / 4.0; }

}  // namespace rcusum::sim

#pragma once

namespace rcusum::cptest {

/// Distribution function of sup_{0<=t<=1} |B(t)| for a Brownian bridge B.
///
///     K(x) = 1 - 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2),  x > 0
///
/// Below x = 1 the equivalent theta-function series
/// sqrt(2 pi)/x sum_{k>=1} exp(-(2k-1)^2 pi^2 / (8 x^2)) is summed instead,
/// since the alternating series converges slowly there. Terms are added
/// until they drop below 1e-12 relative to the partial sum. K(x) = 0 for x <= 0.
[[nodiscard]] double kolmogorov_cdf(double x);

/// 1 - K(x), summed directly in the upper tail so that it stays strictly
/// decreasing far beyond the point where K(x) rounds to 1.
[[nodiscard]] double kolmogorov_sf(double x);

/// Inverse of kolmogorov_cdf by bisection on [0, 5]. Throws unless 0 < p < 1.
[[nodiscard]] double kolmogorov_quantile(double p);

}  // namespace rcusum::cptest

#pragma once

#include "rcusum/series.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace support {

/// Random series of length n whose values come from {0, ..., levels - 1}, so
/// small `levels` produce many ties. y is partly driven by x.
inline rcusum::BivariateSeries tied_series(std::mt19937_64& rng, std::size_t n, int levels) {
    std::uniform_int_distribution<int> pick(0, levels - 1);
    std::bernoulli_distribution follow(0.5);
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = pick(rng);
        ys[i] = follow(rng) ? xs[i] : pick(rng);
    }
    return rcusum::BivariateSeries(std::move(xs), std::move(ys));
}

inline rcusum::BivariateSeries gaussian_series(std::mt19937_64& rng, std::size_t n, double rho) {
    std::normal_distribution<double> z;
    const double c = std::sqrt(1.0 - rho * rho);
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = z(rng);
        ys[i] = rho * xs[i] + c * z(rng);
    }
    return rcusum::BivariateSeries(std::move(xs), std::move(ys));
}

}  // namespace support

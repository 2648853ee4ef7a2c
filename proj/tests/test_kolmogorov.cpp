#include "rcusum/error.hpp"
#include "rcusum/kolmogorov.hpp"

#include "oracles/oracle_values.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace rcusum::cptest;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("cdf against reference values") {
    CHECK_THAT(kolmogorov_cdf(0.5), WithinRel(oracle::kKolmogorovCdf_0_5, 1e-10));
    CHECK_THAT(kolmogorov_cdf(1.0), WithinRel(oracle::kKolmogorovCdf_1_0, 1e-12));
    CHECK_THAT(kolmogorov_cdf(1.3581), WithinRel(oracle::kKolmogorovCdf_1_3581, 1e-12));
    CHECK_THAT(kolmogorov_cdf(2.0), WithinRel(oracle::kKolmogorovCdf_2_0, 1e-12));
    CHECK_THAT(kolmogorov_cdf(3.0), WithinRel(oracle::kKolmogorovCdf_3_0, 1e-12));
    // tiny values: 5.0504073386701e-13 from a 40-digit evaluation of the theta series
    CHECK_THAT(kolmogorov_cdf(0.2), WithinRel(5.050407338670071e-13, 1e-9));
    CHECK_THAT(kolmogorov_cdf(1.3581), WithinAbs(0.95, 1e-4));
}

TEST_CASE("cdf edge values") {
    CHECK(kolmogorov_cdf(0.0) == 0.0);
    CHECK(kolmogorov_cdf(-1.0) == 0.0);
    CHECK(kolmogorov_cdf(10.0) == 1.0);
    CHECK(kolmogorov_sf(0.0) == 1.0);
    CHECK(kolmogorov_sf(-3.0) == 1.0);
}

TEST_CASE("cdf is continuous where the two series meet") {
    CHECK_THAT(kolmogorov_cdf(1.0 - 1e-12), WithinAbs(kolmogorov_cdf(1.0), 1e-11));
    CHECK_THAT(kolmogorov_cdf(std::nextafter(1.0, 0.0)), WithinAbs(kolmogorov_cdf(1.0), 1e-14));
}

TEST_CASE("cdf is nondecreasing and sf complements it") {
    double prev = 0.0;
    for (double x = 0.01; x < 4.0; x += 0.01) {
        const double f = kolmogorov_cdf(x);
        CHECK(f >= prev);
        CHECK_THAT(f + kolmogorov_sf(x), WithinAbs(1.0, 1e-14));
        prev = f;
    }
    CHECK_THAT(kolmogorov_sf(3.0), WithinRel(oracle::kKolmogorovSf_3_0, 1e-10));
    CHECK(kolmogorov_sf(8.0) > 0.0);
    CHECK(kolmogorov_sf(8.0) < kolmogorov_sf(7.0));
}

TEST_CASE("quantiles") {
    CHECK_THAT(kolmogorov_quantile(0.5), WithinAbs(oracle::kKolmogorovQ_0_5, 1e-12));
    CHECK_THAT(kolmogorov_quantile(0.9), WithinAbs(oracle::kKolmogorovQ_0_9, 1e-12));
    CHECK_THAT(kolmogorov_quantile(0.95), WithinAbs(oracle::kKolmogorovQ_0_95, 1e-12));
    CHECK_THAT(kolmogorov_quantile(0.99), WithinAbs(oracle::kKolmogorovQ_0_99, 1e-12));
    for (double p = 0.01; p < 1.0; p += 0.01) CHECK_THAT(kolmogorov_cdf(kolmogorov_quantile(p)), WithinAbs(p, 1e-9));
    CHECK_THROWS_AS(kolmogorov_quantile(0.0), rcusum::Error);
    CHECK_THROWS_AS(kolmogorov_quantile(1.0), rcusum::Error);
    CHECK_THROWS_AS(kolmogorov_quantile(1.5), rcusum::Error);
}

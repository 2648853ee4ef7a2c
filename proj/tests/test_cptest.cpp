#include "rcusum/cptest.hpp"
#include "rcusum/error.hpp"
#include "rcusum/simulate.hpp"

#include "oracles/oracle_values.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace rcusum;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const lrv::LrvConfig kDefault{};

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no rcusum::Error thrown");
    return ErrorCode::usage;
}

BivariateSeries jump_series(double before, double after, std::size_t n, std::uint64_t seed) {
    sim::ScenarioSpec spec;
    spec.first_half = sim::InnovationSpec::normal(before);
    spec.second_half = sim::InnovationSpec::normal(after);
    spec.n = n;
    spec.seed = seed;
    return sim::scenario_series(spec);
}

}  // namespace

TEST_CASE("cusum process arithmetic") {
    const auto proc = cptest::cusum_process(corr::CorrelationPath(corr::Statistic::kendall, 1, {0.0, 0.0, 1.0}));
    REQUIRE(proc.values.size() == 3);
    CHECK_THAT(proc.values[1], WithinAbs(2.0 / std::sqrt(3.0), 1e-15));
    CHECK(proc.values[2] == 0.0);
    CHECK(proc.argmax_k == 2);

    const auto flat = cptest::cusum_process(corr::CorrelationPath(corr::Statistic::kendall, 2, {0.3, 0.3, 0.3}));
    CHECK(flat.t_n == 0.0);
    CHECK(flat.argmax_k == 2);

    // equal maxima at k = 2 and k = 4 resolve to the smaller index
    const auto tie = cptest::cusum_process(corr::CorrelationPath(corr::Statistic::kendall, 2, {1.0, 0.0, 0.5, 0.0}));
    CHECK(tie.values[0] == tie.values[2]);
    CHECK(tie.argmax_k == 2);

    const auto nan = cptest::cusum_process(corr::CorrelationPath(corr::Statistic::pearson, 2, {NAN, 0.5, 0.0}));
    CHECK(nan.values[0] == 0.0);
}

TEST_CASE("test statistics agree with an independent implementation") {
    const BivariateSeries s(oracle::kSeriesX, oracle::kSeriesY);
    const auto k = cptest::kendall_change_test(s, kDefault);
    CHECK_THAT(k.t_n, WithinRel(oracle::kKendallTn, 1e-12));
    CHECK_THAT(k.d_hat, WithinRel(oracle::kKendallD, 1e-10));
    CHECK_THAT(k.normalized, WithinRel(oracle::kKendallStat, 1e-10));
    CHECK_THAT(k.p_value, WithinRel(oracle::kKendallP, 1e-8));
    CHECK(k.bandwidth_used == 7);

    const auto p = cptest::pearson_change_test(s, kDefault);
    CHECK_THAT(p.t_n, WithinRel(oracle::kPearsonTn, 1e-10));
    CHECK_THAT(p.d_hat, WithinRel(oracle::kPearsonD, 1e-10));
    CHECK_THAT(p.p_value, WithinRel(oracle::kPearsonP, 1e-8));

    const auto c = cptest::spearman_copula_change_test(s, kDefault);
    CHECK(c.k_min == 1);
    CHECK_THAT(c.t_n, WithinRel(oracle::kCopulaTn, 1e-10));
    CHECK_THAT(c.d_hat, WithinRel(oracle::kCopulaD, 1e-10));
    CHECK_THAT(c.p_value, WithinRel(oracle::kCopulaP, 1e-8));
}

TEST_CASE("result fields are consistent") {
    const auto s = jump_series(0.4, -0.2, 300, 8);
    for (auto kind : {cptest::TestKind::kendall, cptest::TestKind::pearson, cptest::TestKind::spearman_copula}) {
        const auto r = cptest::run_test(kind, s, kDefault, 0.05);
        CHECK(r.kind == kind);
        CHECK(r.t_n == *std::max_element(r.process.begin(), r.process.end()));
        CHECK(r.process[r.argmax_k - r.k_min] == r.t_n);
        CHECK(r.process.back() == 0.0);
        CHECK(r.p_value == cptest::kolmogorov_sf(r.normalized));
        CHECK(r.reject == (r.p_value < 0.05));
        CHECK(r.reject == (r.normalized > cptest::kolmogorov_quantile(0.95)));
    }
    CHECK(cptest::locate_change(s).k_hat == cptest::kendall_change_test(s, kDefault).argmax_k);
}

TEST_CASE("kendall test is invariant under increasing transforms and exchange of margins") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const auto s = rep % 2 ? support::gaussian_series(rng, 150, 0.4) : support::tied_series(rng, 150, 15);
        std::vector<double> xs(s.xs().begin(), s.xs().end());
        std::vector<double> ys(s.ys().begin(), s.ys().end());
        for (auto& v : xs) v = std::atan(v) * 3.0 + 1.0;
        for (auto& v : ys) v = std::exp(v);
        const auto a = cptest::kendall_change_test(s, kDefault);
        CHECK(cptest::kendall_change_test(BivariateSeries(xs, ys), kDefault) == a);
        CHECK(cptest::kendall_change_test(s.swapped(), kDefault).normalized == a.normalized);
        CHECK_THAT(cptest::spearman_copula_change_test(s.swapped(), kDefault).normalized,
                   WithinRel(cptest::spearman_copula_change_test(s, kDefault).normalized, 1e-12));
    }
}

TEST_CASE("p value decreases with the statistic") {
    double prev = 1.0;
    for (double x = 0.3; x < 3.0; x += 0.05) {
        const double p = cptest::kolmogorov_sf(x);
        CHECK(p < prev);
        prev = p;
    }
}

TEST_CASE("degenerate and invalid inputs") {
    std::vector<double> up(30);
    for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<double>(i);
    const BivariateSeries comonotone(up, up);
    CHECK(code_of([&] { (void)cptest::kendall_change_test(comonotone, kDefault); }) == ErrorCode::degenerate_variance);

    std::vector<double> flat(30, 2.0);
    CHECK(code_of([&] { (void)cptest::pearson_change_test(BivariateSeries(flat, up), kDefault); }) ==
          ErrorCode::degenerate_variance);
    CHECK(code_of([&] { (void)cptest::spearman_copula_change_test(BivariateSeries(flat, flat), kDefault); }) ==
          ErrorCode::degenerate_variance);

    std::mt19937_64 rng(1);
    const auto small = support::gaussian_series(rng, 19, 0.0);
    CHECK(code_of([&] { (void)cptest::kendall_change_test(small, kDefault); }) == ErrorCode::invalid_input);
    const auto ok = support::gaussian_series(rng, 40, 0.0);
    CHECK(code_of([&] { (void)cptest::kendall_change_test(ok, kDefault, 0.0); }) == ErrorCode::invalid_input);
    CHECK(code_of([&] { (void)cptest::kendall_change_test(ok, kDefault, 1.0); }) == ErrorCode::invalid_input);
}

TEST_CASE("decisions on clear cases") {
    const auto h0 = jump_series(0.4, 0.4, 500, 3);
    CHECK(cptest::kendall_change_test(h0, kDefault).p_value > 0.05);
    const auto jump = jump_series(0.4, 0.95, 500, 3);
    CHECK(cptest::kendall_change_test(jump, kDefault).reject);
    CHECK(cptest::pearson_change_test(jump, kDefault).reject);
    // the copula test has low power; only a sign reversal is a clear case
    CHECK(cptest::spearman_copula_change_test(jump_series(0.9, -0.9, 500, 3), kDefault).reject);
}

TEST_CASE("kind names") {
    CHECK(cptest::to_string(cptest::TestKind::spearman_copula) == "spearman");
    CHECK(cptest::test_kind_from_string("copula") == cptest::TestKind::spearman_copula);
    CHECK(cptest::test_kind_from_string("pearson") == cptest::TestKind::pearson);
    CHECK_THROWS_AS(cptest::test_kind_from_string("kendal"), Error);
}

TEST_CASE("change point location") {
    std::vector<double> up(10);
    for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<double>(i);
    CHECK(cptest::locate_change(BivariateSeries(up, up)).k_hat == 2);
    CHECK_THROWS_AS(cptest::locate_change(BivariateSeries({1, 2, 3}, {1, 2, 3})), Error);

    // concordant block then a discordant block: the process peaks at the switch
    const BivariateSeries s({1, 2, 3, 4, 5, 6, 7, 12, 11, 10, 9, 8, 7.5, 6.5},
                            {1, 2, 3, 4, 5, 6, 7, 1.5, 2.5, 3.5, 4.5, 5.5, 6.5, 7.5});
    const auto proc = cptest::cusum_process(corr::kendall_path(s));
    const auto est = cptest::locate_change(s);
    CHECK(est.k_hat == proc.argmax_k);
    CHECK(est.k_hat == 7);
    CHECK(est.lambda_hat == 7.0 / 14.0);

    const auto big = jump_series(0.4, -0.4, 2000, 5);
    CHECK_THAT(cptest::locate_change(big).lambda_hat, WithinAbs(0.5, 0.05));
}

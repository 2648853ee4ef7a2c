#pragma once

#include "rcusum/cptest.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rcusum::cli {

struct InputDigest {
    std::size_t n = 0;
    std::optional<std::string> first_date;
    std::optional<std::string> last_date;

    friend bool operator==(const InputDigest&, const InputDigest&) = default;
};

struct LocatedChange {
    std::size_t k_hat = 0;
    double lambda_hat = 0.0;
    std::optional<std::string> date;  ///< timestamp of observation k_hat

    friend bool operator==(const LocatedChange&, const LocatedChange&) = default;
};

struct ConfigEcho {
    std::string kernel = "quartic";
    std::optional<std::size_t> bandwidth;  ///< nullopt = automatic
    double level = 0.05;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

/**
 * Output of `rank_cusum test`.
 *
 *     {
 *       "input":  {"n": 500, "first_date": "...", "last_date": "..."},
 *       "tests":  [{"statistic": "kendall", "t_n": ..., "d_hat": ..., "normalized": ...,
 *                   "p_value": ..., "alpha": ..., "reject": ..., "k_min": ..., "argmax_k": ...,
 *                   "bandwidth_used": ..., "negative_variance_flag": ..., "process": [...]}],
 *       "change_point": {"k_hat": ..., "lambda_hat": ..., "date": "..."},
 *       "config": {"kernel": "quartic", "bandwidth": null, "level": 0.05, "seed": null}
 *     }
 *
 * Absent optionals are written as null. Doubles are written with round-trip
 * precision, so from_json(to_json(r)) == r.
 */
struct RunReport {
    InputDigest input;
    std::vector<cptest::TestResult> tests;
    std::optional<LocatedChange> change_point;
    ConfigEcho config;

    [[nodiscard]] bool any_reject() const;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

[[nodiscard]] nlohmann::json to_json(const RunReport& report);
/// Throws ErrorCode::invalid_input when a field is missing or has the wrong type.
[[nodiscard]] RunReport report_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json to_json(const cptest::TestResult& result);
[[nodiscard]] cptest::TestResult test_result_from_json(const nlohmann::json& j);

}  // namespace rcusum::cli

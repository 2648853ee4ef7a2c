#include "rcusum/cli/report.hpp"

#include "rcusum/error.hpp"

#include <algorithm>

namespace rcusum::cli {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::invalid_input, std::string("report field '") + key + "' missing");
    }
    return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::invalid_input, std::string("report field '") + key + "': " + e.what());
    }
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
    if (field(j, key).is_null()) return std::nullopt;
    return get<T>(j, key);
}

}  // namespace

bool RunReport::any_reject() const {
    return std::any_of(tests.begin(), tests.end(), [](const cptest::TestResult& t) { return t.reject; });
}

json to_json(const cptest::TestResult& r) {
    return json{{"statistic", std::string(cptest::to_string(r.kind))},
                {"t_n", r.t_n},
                {"d_hat", r.d_hat},
                {"normalized", r.normalized},
                {"p_value", r.p_value},
                {"alpha", r.alpha},
                {"reject", r.reject},
                {"k_min", r.k_min},
                {"argmax_k", r.argmax_k},
                {"bandwidth_used", r.bandwidth_used},
                {"negative_variance_flag", r.negative_variance_flag},
                {"process", r.process}};
}

cptest::TestResult test_result_from_json(const json& j) {
    cptest::TestResult r;
    try {
        r.kind = cptest::test_kind_from_string(get<std::string>(j, "statistic"));
    } catch (const Error& e) {
        throw Error(ErrorCode::invalid_input, e.what());
    }
    r.t_n = get<double>(j, "t_n");
    r.d_hat = get<double>(j, "d_hat");
    r.normalized = get<double>(j, "normalized");
    r.p_value = get<double>(j, "p_value");
    r.alpha = get<double>(j, "alpha");
    r.reject = get<bool>(j, "reject");
    r.k_min = get<std::size_t>(j, "k_min");
    r.argmax_k = get<std::size_t>(j, "argmax_k");
    r.bandwidth_used = get<std::size_t>(j, "bandwidth_used");
    r.negative_variance_flag = get<bool>(j, "negative_variance_flag");
    r.process = get<std::vector<double>>(j, "process");
    return r;
}

json to_json(const RunReport& report) {
    json tests = json::array();
    for (const auto& t : report.tests) tests.push_back(to_json(t));

    json change = nullptr;
    if (report.change_point) {
        change = json{{"k_hat", report.change_point->k_hat},
                      {"lambda_hat", report.change_point->lambda_hat},
                      {"date", optional_json(report.change_point->date)}};
    }
    return json{{"input",
                 {{"n", report.input.n},
                  {"first_date", optional_json(report.input.first_date)},
                  {"last_date", optional_json(report.input.last_date)}}},
                {"tests", std::move(tests)},
                {"change_point", std::move(change)},
                {"config",
                 {{"kernel", report.config.kernel},
                  {"bandwidth", optional_json(report.config.bandwidth)},
                  {"level", report.config.level},
                  {"seed", optional_json(report.config.seed)}}}};
}

RunReport report_from_json(const json& j) {
    RunReport r;
    const json& input = field(j, "input");
    r.input.n = get<std::size_t>(input, "n");
    r.input.first_date = get_optional<std::string>(input, "first_date");
    r.input.last_date = get_optional<std::string>(input, "last_date");

    const json& tests = field(j, "tests");
    if (!tests.is_array()) throw Error(ErrorCode::invalid_input, "report field 'tests' must be an array");
    for (const auto& t : tests) r.tests.push_back(test_result_from_json(t));

    const json& change = field(j, "change_point");
    if (!change.is_null()) {
        LocatedChange c;
        c.k_hat = get<std::size_t>(change, "k_hat");
        c.lambda_hat = get<double>(change, "lambda_hat");
        c.date = get_optional<std::string>(change, "date");
        r.change_point = c;
    }

    const json& config = field(j, "config");
    r.config.kernel = get<std::string>(config, "kernel");
    r.config.bandwidth = get_optional<std::size_t>(config, "bandwidth");
    r.config.level = get<double>(config, "level");
    r.config.seed = get_optional<std::uint64_t>(config, "seed");
    return r;
}

}  // namespace rcusum::cli

#include "rcusum/cli/commands.hpp"

#include "rcusum/cli/csv.hpp"
#include "rcusum/cli/ingest.hpp"
#include "rcusum/cli/report.hpp"
#include "rcusum/error.hpp"
#include "rcusum/experiments.hpp"
#include "rcusum/kolmogorov.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

namespace rcusum::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct InputOptions {
    std::string input;
    std::vector<std::string> prices;
    std::string date_column = "date";
    std::string value_column = "value";
    std::string x_column = "x";
    std::string y_column = "y";
    bool log_returns = false;
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
    auto* input = cmd->add_option("--input", o.input, "CSV with x,y columns (optional date column)");
    auto* prices = cmd->add_option("--prices", o.prices, "two date,value price files, joined on date")
                       ->expected(2);
    input->excludes(prices);
    prices->excludes(input);
    cmd->add_option("--date-column", o.date_column, "date column name")->capture_default_str();
    cmd->add_option("--value-column", o.value_column, "price column name (--prices)")->capture_default_str();
    cmd->add_option("--x-column", o.x_column, "x column name (--input)")->capture_default_str();
    cmd->add_option("--y-column", o.y_column, "y column name (--input)")->capture_default_str();
    cmd->add_flag("--log-returns", o.log_returns, "treat --input columns as prices and use log returns");
}

BivariateSeries load(const InputOptions& o) {
    IngestConfig config;
    config.date_column = o.date_column;
    config.value_column = o.value_column;
    config.x_column = o.x_column;
    config.y_column = o.y_column;
    std::vector<fs::path> paths;
    if (!o.prices.empty()) {
        config.mode = IngestMode::two_price_files;
        config.log_returns = true;
        paths.assign(o.prices.begin(), o.prices.end());
    } else if (!o.input.empty()) {
        config.mode = IngestMode::paired_xy;
        config.log_returns = o.log_returns;
        paths.emplace_back(o.input);
    } else {
        throw Error(ErrorCode::usage, "one of --input or --prices is required");
    }
    return ingest(config, paths);
}

std::optional<std::string> date_at(const BivariateSeries& s, std::size_t k) {
    if (!s.timestamps() || k == 0) return std::nullopt;
    return (*s.timestamps())[k - 1];
}

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path.string() + "'");
    return out;
}

void write_json(const fs::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

// --- test -----------------------------------------------------------------------

struct TestOptions {
    InputOptions input;
    std::string statistic = "kendall";
    std::string kernel = "quartic";
    std::string bandwidth = "auto";
    std::string on_negative = "clamp";
    double level = 0.05;
    std::string out;
    std::string process_out;
};

std::optional<std::size_t> parse_bandwidth(const std::string& text) {
    if (text == "auto") return std::nullopt;
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw Error(ErrorCode::usage, "--bandwidth must be 'auto' or a positive integer");
    }
    if (v <= 0) throw Error(ErrorCode::usage, "--bandwidth must be at least 1");
    return static_cast<std::size_t>(v);
}

fs::path with_suffix(const fs::path& base, const std::string& suffix) {
    const std::string ext = base.has_extension() ? base.extension().string() : ".csv";
    return base.parent_path() / (base.stem().string() + suffix + ext);
}

void write_process(const fs::path& path, const cptest::TestResult& r, const BivariateSeries& s) {
    auto out = open_out(path);
    const bool dated = s.timestamps().has_value();
    write_csv_row(out, dated ? std::vector<std::string>{"k", "date", "weighted_abs_diff"}
                             : std::vector<std::string>{"k", "weighted_abs_diff"});
    for (std::size_t i = 0; i < r.process.size(); ++i) {
        const std::size_t k = r.k_min + i;
        std::vector<std::string> row{std::to_string(k)};
        if (dated) row.push_back(*date_at(s, k));
        row.push_back(format_double(r.process[i]));
        write_csv_row(out, row);
    }
}

int cmd_test(const TestOptions& o, std::ostream& out) {
    if (!(o.level > 0.0 && o.level < 1.0)) throw Error(ErrorCode::usage, "--level must lie in (0, 1)");
    lrv::LrvConfig config;
    config.kernel.kind = lrv::kernel_from_string(o.kernel);
    config.bandwidth = parse_bandwidth(o.bandwidth);
    config.fallback = o.on_negative == "error" ? lrv::NegativeFallback::error : lrv::NegativeFallback::clamp_to_lag0;

    const BivariateSeries series = load(o.input);

    std::vector<cptest::TestKind> kinds;
    if (o.statistic == "all") {
        kinds = {cptest::TestKind::kendall, cptest::TestKind::pearson, cptest::TestKind::spearman_copula};
    } else {
        kinds = {cptest::test_kind_from_string(o.statistic)};
    }

    RunReport report;
    report.input.n = series.size();
    if (const auto& ts = series.timestamps()) {
        report.input.first_date = ts->front();
        report.input.last_date = ts->back();
    }
    report.config.kernel = std::string(lrv::to_string(config.kernel.kind));
    report.config.bandwidth = config.bandwidth;
    report.config.level = o.level;
    for (auto kind : kinds) report.tests.push_back(cptest::run_test(kind, series, config, o.level));
    const auto located = cptest::locate_change(series);
    report.change_point = LocatedChange{located.k_hat, located.lambda_hat, date_at(series, located.k_hat)};

    const json j = to_json(report);
    if (!o.out.empty()) write_json(o.out, j);

    std::optional<fs::path> process_base;
    if (!o.process_out.empty()) process_base = fs::path(o.process_out);
    else if (!o.out.empty()) process_base = with_suffix(fs::path(o.out).replace_extension(".csv"), "_process");
    if (process_base) {
        for (const auto& r : report.tests) {
            const fs::path path = report.tests.size() == 1
                                      ? *process_base
                                      : with_suffix(*process_base, "_" + std::string(cptest::to_string(r.kind)));
            write_process(path, r, series);
        }
    }

    out << j.dump(2) << '\n';
    return report.any_reject() ? kExitReject : kExitNoReject;
}

// --- locate ---------------------------------------------------------------------

struct LocateOptions {
    InputOptions input;
    std::string out;
};

int cmd_locate(const LocateOptions& o, std::ostream& out) {
    const BivariateSeries series = load(o.input);
    const auto est = cptest::locate_change(series);
    const auto date = date_at(series, est.k_hat);
    const json j{{"n", series.size()},
                 {"k_hat", est.k_hat},
                 {"lambda_hat", est.lambda_hat},
                 {"date", date ? json(*date) : json(nullptr)}};
    if (!o.out.empty()) write_json(o.out, j);
    out << j.dump(2) << '\n';
    return kExitNoReject;
}

// --- simulate -------------------------------------------------------------------

struct SimulateOptions {
    std::size_t reps = 0;  // 0 = subcommand default
    std::vector<std::size_t> n;
    std::uint64_t seed = 42;
    std::string out_dir = "out";
    std::size_t threads = 0;
    double level = 0.05;
    int model = 1;
    std::vector<std::string> distributions;
    double lambda = 0.5;
    double rho_before = 0.4;
    double rho_after = -0.4;
    std::string distribution = "normal";
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

int simulate_table(int model, const SimulateOptions& o, std::ostream& out) {
    if (!(o.level > 0.0 && o.level < 1.0)) throw Error(ErrorCode::usage, "--level must lie in (0, 1)");
    if (o.n.size() > 1) throw Error(ErrorCode::usage, "tables take a single --n");
    const std::size_t n = o.n.empty() ? 500 : o.n.front();
    const std::size_t reps = o.reps > 0 ? o.reps : 1000;

    std::vector<sim::InnovationSpec> dists;
    if (o.distributions.empty()) dists = sim::standard_distributions();
    for (const auto& label : o.distributions) dists.push_back(sim::innovation_from_label(label, 0.0));
    const auto jumps = sim::standard_jumps();

    const auto rows = sim::run_rejection_table(model, dists, jumps, n, reps, o.level, o.seed, o.threads);

    const fs::path dir(o.out_dir);
    fs::create_directories(dir);
    const std::string name = "table" + std::to_string(model);
    auto csv = open_out(dir / (name + ".csv"));
    write_csv_row(csv, {"distribution", "test", "jump", "rho_before", "rho_after", "frequency", "failures",
                        "replications", "level"});
    json jrows = json::array();
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < jumps.size(); ++j) {
            write_csv_row(csv, {row.distribution, std::string(cptest::to_string(row.test)), jumps[j].label,
                                format_double(sim::kTableRhoBefore), format_double(jumps[j].rho_after),
                                format_double(row.frequencies[j]), std::to_string(row.failures[j]),
                                std::to_string(row.replications), format_double(row.level)});
        }
        jrows.push_back({{"distribution", row.distribution},
                         {"test", std::string(cptest::to_string(row.test))},
                         {"jumps", row.jump_labels},
                         {"frequencies", row.frequencies},
                         {"failures", row.failures}});
    }
    write_json(dir / (name + ".json"), json{{"model", model},
                                            {"phi", sim::model_phi(model)},
                                            {"n", n},
                                            {"replications", reps},
                                            {"level", o.level},
                                            {"seed", o.seed},
                                            {"rows", std::move(jrows)}});

    out << std::left << std::setw(14) << "distribution" << std::setw(10) << "test";
    for (const auto& jump : jumps) out << std::right << std::setw(7) << jump.label;
    out << '\n';
    for (const auto& row : rows) {
        out << std::left << std::setw(14) << row.distribution << std::setw(10) << cptest::to_string(row.test);
        for (double f : row.frequencies) out << std::right << std::setw(7) << fixed(f, 3);
        out << '\n';
    }
    out << "wrote " << (dir / (name + ".csv")).string() << '\n';
    return kExitNoReject;
}

int simulate_convergence(const SimulateOptions& o, std::ostream& out) {
    const std::vector<std::size_t> n_list =
        o.n.empty() ? std::vector<std::size_t>{10, 20, 50, 100, 500, 1000} : o.n;
    const std::size_t reps = o.reps > 0 ? o.reps : 5000;
    const auto samples = sim::run_convergence_experiment(o.model, n_list, reps, o.seed, o.threads);

    const fs::path dir(o.out_dir);
    fs::create_directories(dir);
    const std::string stem = "convergence_model" + std::to_string(o.model);
    auto summary = open_out(dir / (stem + ".csv"));
    write_csv_row(summary, {"n", "replications", "sup_distance_estimated", "sup_distance_known"});
    json jsamples = json::array();
    out << std::left << std::setw(8) << "n" << std::right << std::setw(16) << "sup|F-K| est D" << std::setw(18)
        << "sup|F-K| known D" << '\n';
    for (const auto& s : samples) {
        auto csv = open_out(dir / (stem + "_n" + std::to_string(s.n) + ".csv"));
        write_csv_row(csv, {"rank", "estimated_d", "known_d"});
        for (std::size_t i = 0; i < s.estimated_d.size(); ++i) {
            write_csv_row(csv, {std::to_string(i + 1), format_double(s.estimated_d[i]), format_double(s.known_d[i])});
        }
        write_csv_row(summary, {std::to_string(s.n), std::to_string(reps), format_double(s.sup_distance_estimated),
                                format_double(s.sup_distance_known)});
        jsamples.push_back({{"n", s.n},
                            {"sup_distance_estimated", s.sup_distance_estimated},
                            {"sup_distance_known", s.sup_distance_known}});
        out << std::left << std::setw(8) << s.n << std::right << std::setw(16) << fixed(s.sup_distance_estimated, 4)
            << std::setw(18) << fixed(s.sup_distance_known, 4) << '\n';
    }
    write_json(dir / (stem + ".json"), json{{"model", o.model},
                                            {"replications", reps},
                                            {"seed", o.seed},
                                            {"samples", std::move(jsamples)}});
    return kExitNoReject;
}

int simulate_locator(const SimulateOptions& o, std::ostream& out) {
    const std::vector<std::size_t> n_list = o.n.empty() ? std::vector<std::size_t>{500, 1000, 2000} : o.n;
    const std::size_t reps = o.reps > 0 ? o.reps : 200;
    std::vector<sim::LocatorCell> cells;
    for (std::size_t n : n_list) {
        sim::LocatorCell cell;
        cell.n = n;
        cell.lambda_star = o.lambda;
        cell.before = sim::innovation_from_label(o.distribution, o.rho_before);
        cell.after = sim::innovation_from_label(o.distribution, o.rho_after);
        cell.phi = sim::model_phi(o.model);
        cells.push_back(cell);
    }
    const auto summaries = sim::run_locator_experiment(cells, reps, o.seed, o.threads);

    const fs::path dir(o.out_dir);
    fs::create_directories(dir);
    auto csv = open_out(dir / "locator.csv");
    write_csv_row(csv, {"n", "lambda_star", "distribution", "rho_before", "rho_after", "phi", "tau_F", "tau_G",
                        "tau_FG", "replications", "mean_error", "median_error", "q90_error"});
    json jcells = json::array();
    out << std::left << std::setw(8) << "n" << std::right << std::setw(12) << "mean" << std::setw(12) << "median"
        << std::setw(12) << "q90" << '\n';
    for (const auto& s : summaries) {
        write_csv_row(csv, {std::to_string(s.cell.n), format_double(s.cell.lambda_star), s.cell.before.label(),
                            format_double(s.cell.before.rho), format_double(s.cell.after.rho),
                            format_double(s.cell.phi), format_double(s.implied.tau_F),
                            format_double(s.implied.tau_G), format_double(s.implied.tau_FG),
                            std::to_string(s.replications), format_double(s.mean_error),
                            format_double(s.median_error), format_double(s.q90_error)});
        jcells.push_back({{"n", s.cell.n},
                          {"mean_error", s.mean_error},
                          {"median_error", s.median_error},
                          {"q90_error", s.q90_error}});
        out << std::left << std::setw(8) << s.cell.n << std::right << std::setw(12) << fixed(s.mean_error, 4)
            << std::setw(12) << fixed(s.median_error, 4) << std::setw(12) << fixed(s.q90_error, 4) << '\n';
    }
    write_json(dir / "locator.json", json{{"model", o.model},
                                          {"lambda_star", o.lambda},
                                          {"distribution", o.distribution},
                                          {"rho_before", o.rho_before},
                                          {"rho_after", o.rho_after},
                                          {"replications", reps},
                                          {"seed", o.seed},
                                          {"cells", std::move(jcells)}});
    return kExitNoReject;
}

// --- quantiles ------------------------------------------------------------------

struct QuantileOptions {
    std::optional<double> p;
    std::optional<double> x;
};

int cmd_quantiles(const QuantileOptions& o, std::ostream& out) {
    if (o.p.has_value() == o.x.has_value()) throw Error(ErrorCode::usage, "give exactly one of --p or --x");
    char buf[64];
    if (o.p) {
        if (!(*o.p > 0.0 && *o.p < 1.0)) throw Error(ErrorCode::usage, "--p must lie in (0, 1)");
        std::snprintf(buf, sizeof buf, "%.10g", cptest::kolmogorov_quantile(*o.p));
    } else {
        std::snprintf(buf, sizeof buf, "%.10g", cptest::kolmogorov_sf(*o.x));
    }
    out << buf << '\n';
    return kExitNoReject;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tests and locates changes in Kendall's tau of a bivariate time series.", "rank_cusum"};
    app.require_subcommand(1);

    TestOptions test;
    auto* test_cmd = app.add_subcommand("test", "CUSUM test for a change in correlation");
    add_input_options(test_cmd, test.input);
    test_cmd->add_option("--statistic", test.statistic, "kendall | pearson | spearman | all")
        ->check(CLI::IsMember({"kendall", "pearson", "spearman", "all"}))
        ->capture_default_str();
    test_cmd->add_option("--kernel", test.kernel, "quartic | bartlett")
        ->check(CLI::IsMember({"quartic", "bartlett"}))
        ->capture_default_str();
    test_cmd->add_option("--bandwidth", test.bandwidth, "auto or a positive integer")->capture_default_str();
    test_cmd->add_option("--on-negative", test.on_negative, "clamp | error: non-positive variance estimate")
        ->check(CLI::IsMember({"clamp", "error"}))
        ->capture_default_str();
    test_cmd->add_option("--level", test.level, "significance level")->capture_default_str();
    test_cmd->add_option("--out", test.out, "write the JSON report here");
    test_cmd->add_option("--process-out", test.process_out, "write the CUSUM process CSV here");

    LocateOptions locate;
    auto* locate_cmd = app.add_subcommand("locate", "estimate the change point");
    add_input_options(locate_cmd, locate.input);
    locate_cmd->add_option("--out", locate.out, "write the JSON result here");

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo experiments");
    sim_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--reps", sim.reps, "replications");
        cmd->add_option("--n", sim.n, "sample size(s), comma separated")->delimiter(',');
        cmd->add_option("--seed", sim.seed, "master seed")->capture_default_str();
        cmd->add_option("--out-dir", sim.out_dir, "artifact directory (created if absent)")->capture_default_str();
        cmd->add_option("--threads", sim.threads, "workers (0 = all cores; RANK_CUSUM_THREADS caps)");
    };
    auto* table1 = sim_cmd->add_subcommand("table1", "rejection frequencies, independent observations");
    auto* table2 = sim_cmd->add_subcommand("table2", "rejection frequencies, AR(1) with phi = 0.8");
    for (auto* cmd : {table1, table2}) {
        add_common(cmd);
        cmd->add_option("--level", sim.level, "test level")->capture_default_str();
        cmd->add_option("--distributions", sim.distributions, "normal,t20,t5,t3,t1")->delimiter(',');
    }
    auto* convergence = sim_cmd->add_subcommand("convergence", "null distribution against the Kolmogorov law");
    add_common(convergence);
    convergence->add_option("--model", sim.model, "1 (independent) or 2 (AR(1), phi = 0.8)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    auto* locator = sim_cmd->add_subcommand("locator", "accuracy of the change-point estimate");
    add_common(locator);
    locator->add_option("--model", sim.model, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
    locator->add_option("--lambda", sim.lambda, "true change fraction")->capture_default_str();
    locator->add_option("--rho-before", sim.rho_before, "shape before the change")->capture_default_str();
    locator->add_option("--rho-after", sim.rho_after, "shape after the change")->capture_default_str();
    locator->add_option("--distribution", sim.distribution, "normal or t<df>")->capture_default_str();

    QuantileOptions quant;
    auto* quant_cmd = app.add_subcommand("quantiles", "Kolmogorov quantile (--p) or p-value (--x)");
    quant_cmd->add_option("--p", quant.p, "probability in (0, 1)");
    quant_cmd->add_option("--x", quant.x, "statistic value");

    // CLI11 consumes a reversed argument list without the program name
    std::vector<std::string> rest;
    if (!args.empty()) rest.assign(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitNoReject : kExitError;
    }

    try {
        if (*test_cmd) return cmd_test(test, out);
        if (*locate_cmd) return cmd_locate(locate, out);
        if (*quant_cmd) return cmd_quantiles(quant, out);
        if (*table1) return simulate_table(1, sim, out);
        if (*table2) return simulate_table(2, sim, out);
        if (*convergence) return simulate_convergence(sim, out);
        if (*locator) return simulate_locator(sim, out);
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace rcusum::cli

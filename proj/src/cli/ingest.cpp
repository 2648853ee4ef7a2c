#include "rcusum/cli/ingest.hpp"

#include "rcusum/cli/csv.hpp"
#include "rcusum/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>

namespace rcusum::cli {

namespace {

bool digits(std::string_view s, std::size_t pos, std::size_t count) {
    if (pos + count > s.size()) return false;
    for (std::size_t i = pos; i < pos + count; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

int number(std::string_view s, std::size_t pos, std::size_t count) {
    int v = 0;
    for (std::size_t i = pos; i < pos + count; ++i) v = 10 * v + (s[i] - '0');
    return v;
}

int days_in_month(int year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return month == 2 && leap ? 29 : kDays[month - 1];
}

Error bad_cell(const CsvTable& t, std::size_t line, const std::string& what) {
    return Error(ErrorCode::malformed_csv, t.source + ":" + std::to_string(line) + ": " + what);
}

double parse_value(const CsvTable& t, std::size_t row, std::size_t col) {
    const std::string& s = t.rows[row][col];
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw bad_cell(t, t.lines[row], "column '" + t.header[col] + "' is not a finite number: '" + s + "'");
    }
    return v;
}

const std::string& parse_date(const CsvTable& t, std::size_t row, std::size_t col) {
    const std::string& s = t.rows[row][col];
    if (!is_iso_date(s)) throw bad_cell(t, t.lines[row], "invalid date '" + s + "'");
    return s;
}

double log_return(double prev, double cur, const CsvTable& t, std::size_t prev_line, std::size_t line) {
    if (!(prev > 0.0)) {
        throw Error(ErrorCode::domain_error, t.source + ":" + std::to_string(prev_line) +
                                                 ": non-positive price " + format_double(prev) + " under log returns");
    }
    if (!(cur > 0.0)) {
        throw Error(ErrorCode::domain_error, t.source + ":" + std::to_string(line) + ": non-positive price " +
                                                 format_double(cur) + " under log returns");
    }
    return std::log(cur / prev);
}

BivariateSeries ingest_paired(const IngestConfig& config, const std::filesystem::path& path) {
    const CsvTable t = read_csv(path);
    const std::size_t cx = t.require_column(config.x_column);
    const std::size_t cy = t.require_column(config.y_column);
    const std::optional<std::size_t> cd = t.column(config.date_column);

    const std::size_t rows = t.rows.size();
    std::vector<double> xs(rows);
    std::vector<double> ys(rows);
    std::optional<std::vector<std::string>> dates;
    if (cd) dates.emplace(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        xs[r] = parse_value(t, r, cx);
        ys[r] = parse_value(t, r, cy);
        if (cd) {
            (*dates)[r] = parse_date(t, r, *cd);
            if (r > 0 && (*dates)[r] <= (*dates)[r - 1]) {
                throw bad_cell(t, t.lines[r], "dates must be strictly increasing");
            }
        }
    }

    if (!config.log_returns) return BivariateSeries(std::move(xs), std::move(ys), std::move(dates));

    std::vector<double> rx;
    std::vector<double> ry;
    for (std::size_t r = 1; r < rows; ++r) {
        rx.push_back(log_return(xs[r - 1], xs[r], t, t.lines[r - 1], t.lines[r]));
        ry.push_back(log_return(ys[r - 1], ys[r], t, t.lines[r - 1], t.lines[r]));
    }
    if (dates) dates->erase(dates->begin());
    return BivariateSeries(std::move(rx), std::move(ry), std::move(dates));
}

struct Quote {
    double price;
    std::size_t line;
};

std::map<std::string, Quote> read_prices(const IngestConfig& config, const CsvTable& t) {
    const std::size_t cd = t.require_column(config.date_column);
    const std::size_t cv = t.require_column(config.value_column);
    std::map<std::string, Quote> quotes;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const std::string& date = parse_date(t, r, cd);
        const double price = parse_value(t, r, cv);
        if (!quotes.emplace(date, Quote{price, t.lines[r]}).second) {
            throw bad_cell(t, t.lines[r], "duplicate date '" + date + "'");
        }
    }
    return quotes;
}

BivariateSeries ingest_two_files(const IngestConfig& config, const std::filesystem::path& first,
                                 const std::filesystem::path& second) {
    const CsvTable ta = read_csv(first);
    const CsvTable tb = read_csv(second);
    const auto qa = read_prices(config, ta);
    const auto qb = read_prices(config, tb);

    std::vector<std::string> dates;
    std::vector<const Quote*> a;
    std::vector<const Quote*> b;
    for (const auto& [date, quote] : qa) {
        auto it = qb.find(date);
        if (it == qb.end()) continue;
        dates.push_back(date);
        a.push_back(&quote);
        b.push_back(&it->second);
    }
    if (dates.empty()) {
        throw Error(ErrorCode::empty_intersection,
                    "'" + ta.source + "' and '" + tb.source + "' share no date");
    }

    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 1; i < dates.size(); ++i) {
        xs.push_back(log_return(a[i - 1]->price, a[i]->price, ta, a[i - 1]->line, a[i]->line));
        ys.push_back(log_return(b[i - 1]->price, b[i]->price, tb, b[i - 1]->line, b[i]->line));
    }
    if (xs.size() < 2) {
        throw Error(ErrorCode::invalid_input, "only " + std::to_string(dates.size()) +
                                                  " common dates; at least 3 are needed for two returns");
    }
    dates.erase(dates.begin());
    return BivariateSeries(std::move(xs), std::move(ys), std::move(dates));
}

}  // namespace

bool is_iso_date(std::string_view s) {
    if (!digits(s, 0, 4) || s.size() < 10 || s[4] != '-' || !digits(s, 5, 2) || s[7] != '-' || !digits(s, 8, 2)) {
        return false;
    }
    const int year = number(s, 0, 4);
    const int month = number(s, 5, 2);
    const int day = number(s, 8, 2);
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) return false;
    if (s.size() == 10) return true;

    std::size_t p = 10;
    if (s[p] != 'T' && s[p] != ' ') return false;
    ++p;
    if (!digits(s, p, 2) || p + 2 >= s.size() || s[p + 2] != ':' || !digits(s, p + 3, 2)) return false;
    if (number(s, p, 2) > 23 || number(s, p + 3, 2) > 59) return false;
    p += 5;
    if (p < s.size() && s[p] == ':') {
        if (!digits(s, p + 1, 2) || number(s, p + 1, 2) > 60) return false;
        p += 3;
        if (p < s.size() && s[p] == '.') {
            ++p;
            const std::size_t start = p;
            while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
            if (p == start) return false;
        }
    }
    if (p == s.size()) return true;
    if (s[p] == 'Z') return p + 1 == s.size();
    if (s[p] != '+' && s[p] != '-') return false;
    return p + 6 == s.size() && digits(s, p + 1, 2) && s[p + 3] == ':' && digits(s, p + 4, 2) &&
           number(s, p + 1, 2) <= 23 && number(s, p + 4, 2) <= 59;
}

BivariateSeries ingest(const IngestConfig& config, std::span<const std::filesystem::path> paths) {
    switch (config.mode) {
        case IngestMode::paired_xy:
            if (paths.size() != 1) throw Error(ErrorCode::usage, "paired input takes exactly one file");
            return ingest_paired(config, paths[0]);
        case IngestMode::two_price_files:
            if (paths.size() != 2) throw Error(ErrorCode::usage, "price input takes exactly two files");
            return ingest_two_files(config, paths[0], paths[1]);
    }
    throw Error(ErrorCode::usage, "unknown ingest mode");
}

}  // namespace rcusum::cli

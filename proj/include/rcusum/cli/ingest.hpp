#pragma once

#include "rcusum/series.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace rcusum::cli {

enum class IngestMode {
    paired_xy,        ///< one file with x and y columns (and an optional date column)
    two_price_files,  ///< one date,value file per series, inner-joined on date
};

struct IngestConfig {
    IngestMode mode = IngestMode::paired_xy;
    std::string date_column = "date";
    std::string value_column = "value";
    std::string x_column = "x";
    std::string y_column = "y";
    /// Replace each series by r_t = ln(p_t / p_{t-1}). Always on for two_price_files.
    bool log_returns = false;
};

/// YYYY-MM-DD, optionally followed by Thh:mm[:ss[.fff]] and Z or +hh:mm.
[[nodiscard]] bool is_iso_date(std::string_view text);

/**
 * Reads the series described by `config`.
 *
 * paired_xy takes one path; two_price_files takes two, keeps the dates both
 * files share (inner join, sorted) and converts the aligned prices to log
 * returns, each stamped with the later date.
 *
 * Errors: ErrorCode::malformed_csv for bad structure, non-numeric values,
 * bad or duplicate dates (all with line numbers); ErrorCode::empty_intersection
 * when the files share no date; ErrorCode::domain_error for a non-positive
 * price under log returns; ErrorCode::io_error for unreadable files.
 */
[[nodiscard]] BivariateSeries ingest(const IngestConfig& config, std::span<const std::filesystem::path> paths);

}  // namespace rcusum::cli

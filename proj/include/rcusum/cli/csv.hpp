#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rcusum::cli {

/// A CSV file with a header row. Fields may be double-quoted ("" escapes a quote).
struct CsvTable {
    std::string source;                      ///< file name used in error messages
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> lines;          ///< 1-based source line of each row

    /// Index of a header column, or nullopt.
    [[nodiscard]] std::optional<std::size_t> column(std::string_view name) const;
    /// Same, but throws ErrorCode::malformed_csv when the column is missing.
    [[nodiscard]] std::size_t require_column(std::string_view name) const;
};

/// Throws ErrorCode::malformed_csv (empty input, unterminated quote, ragged row)
/// with the offending line number.
[[nodiscard]] CsvTable parse_csv(std::istream& in, const std::string& source);
/// Throws ErrorCode::io_error when the file cannot be opened.
[[nodiscard]] CsvTable read_csv(const std::filesystem::path& path);

/// Quotes a field when it contains a comma, quote or line break.
[[nodiscard]] std::string csv_escape(std::string_view field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest text that reads back to the same double.
[[nodiscard]] std::string format_double(double v);

}  // namespace rcusum::cli

#include "rcusum/cli/csv.hpp"

#include "rcusum/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace rcusum::cli {

namespace {

Error malformed(const std::string& source, std::size_t line, const std::string& what) {
    return Error(ErrorCode::malformed_csv, source + ":" + std::to_string(line) + ": " + what);
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t CsvTable::require_column(std::string_view name) const {
    if (auto c = column(name)) return *c;
    throw Error(ErrorCode::malformed_csv, source + ": missing column '" + std::string(name) + "'");
}

CsvTable parse_csv(std::istream& in, const std::string& source) {
    CsvTable table;
    table.source = source;

    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t record_line = line_no;
        if (blank(line)) continue;

        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        std::size_t i = 0;
        for (;;) {
            if (i == line.size()) {
                if (!quoted) break;
                // quoted field spanning lines
                if (!std::getline(in, line)) throw malformed(source, record_line, "unterminated quote");
                ++line_no;
                field += '\n';
                i = 0;
                continue;
            }
            const char c = line[i++];
            if (quoted) {
                if (c != '"') {
                    field += c;
                } else if (i < line.size() && line[i] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else if (c != '\r' || i != line.size()) {
                field += c;
            }
        }
        fields.push_back(std::move(field));
        for (auto& f : fields) {
            const auto a = f.find_first_not_of(" \t");
            const auto b = f.find_last_not_of(" \t");
            f = a == std::string::npos ? std::string() : f.substr(a, b - a + 1);
        }

        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw malformed(source, record_line,
                            "expected " + std::to_string(table.header.size()) + " fields, found " +
                                std::to_string(fields.size()));
        }
        table.rows.push_back(std::move(fields));
        table.lines.push_back(record_line);
    }
    if (!have_header) throw Error(ErrorCode::malformed_csv, source + ": empty file, header row expected");
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
    return parse_csv(in, path.string());
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ',';
        out << csv_escape(fields[i]);
    }
    out << '\n';
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace rcusum::cli

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rcusum {

enum class ErrorCode {
    invalid_input,
    degenerate_variance,
    negative_variance,
    empty_intersection,
    domain_error,
    malformed_csv,
    io_error,
    usage,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. Every failure raised by rcusum carries a code so
/// that callers (the CLI in particular) can map failures without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rcusum

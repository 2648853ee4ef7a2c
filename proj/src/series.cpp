#include "rcusum/series.hpp"

#include "rcusum/error.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace rcusum {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_input: return "invalid_input";
        case ErrorCode::degenerate_variance: return "degenerate_variance";
        case ErrorCode::negative_variance: return "negative_variance";
        case ErrorCode::empty_intersection: return "empty_intersection";
        case ErrorCode::domain_error: return "domain_error";
        case ErrorCode::malformed_csv: return "malformed_csv";
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::usage: return "usage";
    }
    return "unknown";
}

namespace {

void validate(const std::vector<double>& xs, const std::vector<double>& ys,
              const std::optional<std::vector<std::string>>& timestamps, std::size_t min_n) {
    if (xs.size() != ys.size()) {
        throw Error(ErrorCode::invalid_input, "series length mismatch: " + std::to_string(xs.size()) +
                                                  " x values vs " + std::to_string(ys.size()) + " y values");
    }
    if (xs.size() < min_n) {
        throw Error(ErrorCode::invalid_input,
                    "series needs at least " + std::to_string(min_n) + " observations, got " +
                        std::to_string(xs.size()));
    }
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(xs.begin(), xs.end(), finite) || !std::all_of(ys.begin(), ys.end(), finite)) {
        throw Error(ErrorCode::invalid_input, "series contains non-finite values");
    }
    if (timestamps) {
        if (timestamps->size() != xs.size()) {
            throw Error(ErrorCode::invalid_input, "timestamp count does not match series length");
        }
        // ISO-8601 dates of a fixed layout order lexicographically.
        for (std::size_t i = 1; i < timestamps->size(); ++i) {
            if (!((*timestamps)[i - 1] < (*timestamps)[i])) {
                throw Error(ErrorCode::invalid_input,
                            "timestamps not strictly increasing at position " + std::to_string(i + 1));
            }
        }
    }
}

}  // namespace

BivariateSeries::BivariateSeries(std::vector<double> xs, std::vector<double> ys,
                                 std::optional<std::vector<std::string>> timestamps)
    : xs_(std::move(xs)), ys_(std::move(ys)), timestamps_(std::move(timestamps)) {
    validate(xs_, ys_, timestamps_, 2);
}

BivariateSeries::BivariateSeries(Unchecked, std::vector<double> xs, std::vector<double> ys,
                                 std::optional<std::vector<std::string>> timestamps)
    : xs_(std::move(xs)), ys_(std::move(ys)), timestamps_(std::move(timestamps)) {}

BivariateSeries BivariateSeries::allow_single(std::vector<double> xs, std::vector<double> ys) {
    validate(xs, ys, std::nullopt, 1);
    return BivariateSeries(Unchecked{}, std::move(xs), std::move(ys), std::nullopt);
}

BivariateSeries BivariateSeries::prefix(std::size_t k) const {
    if (k < 2 || k > size()) {
        throw Error(ErrorCode::invalid_input, "prefix length out of range");
    }
    std::optional<std::vector<std::string>> ts;
    if (timestamps_) {
        ts.emplace(timestamps_->begin(), timestamps_->begin() + static_cast<std::ptrdiff_t>(k));
    }
    return BivariateSeries(Unchecked{}, std::vector<double>(xs_.begin(), xs_.begin() + static_cast<std::ptrdiff_t>(k)),
                           std::vector<double>(ys_.begin(), ys_.begin() + static_cast<std::ptrdiff_t>(k)),
                           std::move(ts));
}

BivariateSeries BivariateSeries::swapped() const {
    return BivariateSeries(Unchecked{}, ys_, xs_, timestamps_);
}

}  // namespace rcusum

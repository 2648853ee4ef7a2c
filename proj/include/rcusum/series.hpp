#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rcusum {

/**
 * Aligned observations (x_i, y_i), i = 1..n, with optional ISO-8601 dates.
 *
 * Construction validates the invariants: equal lengths, n >= 2, finite
 * values, and strictly increasing timestamps when present. Invalid input
 * raises rcusum::Error with ErrorCode::invalid_input.
 */
class BivariateSeries {
public:
    BivariateSeries(std::vector<double> xs, std::vector<double> ys,
                    std::optional<std::vector<std::string>> timestamps = std::nullopt);

    /// Same checks but allows n == 1; used by the few operations defined there.
    static BivariateSeries allow_single(std::vector<double> xs, std::vector<double> ys);

    [[nodiscard]] std::size_t size() const noexcept { return xs_.size(); }
    [[nodiscard]] std::span<const double> xs() const noexcept { return xs_; }
    [[nodiscard]] std::span<const double> ys() const noexcept { return ys_; }
    [[nodiscard]] const std::optional<std::vector<std::string>>& timestamps() const noexcept {
        return timestamps_;
    }

    /// First k observations (timestamps included); requires 2 <= k <= n.
    [[nodiscard]] BivariateSeries prefix(std::size_t k) const;

    /// The series with x and y exchanged.
    [[nodiscard]] BivariateSeries swapped() const;

private:
    struct Unchecked {};
    BivariateSeries(Unchecked, std::vector<double> xs, std::vector<double> ys,
                    std::optional<std::vector<std::string>> timestamps);

    std::vector<double> xs_;
    std::vector<double> ys_;
    std::optional<std::vector<std::string>> timestamps_;
};

}  // namespace rcusum

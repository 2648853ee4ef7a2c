#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace rcusum::detail {

/// Binary indexed tree of counts over positions 0..size-1.
class Fenwick {
public:
    explicit Fenwick(std::size_t size) : tree_(size + 1, 0) {}

    void add(std::size_t pos, std::int64_t delta = 1) {
        for (std::size_t i = pos + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
    }

    /// Sum over positions 0..pos inclusive.
    [[nodiscard]] std::int64_t prefix_sum(std::size_t pos) const {
        std::int64_t s = 0;
        for (std::size_t i = pos + 1; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }

private:
    std::vector<std::int64_t> tree_;
};

/// Indices that sort `values` ascending (stable).
inline std::vector<std::size_t> argsort(std::span<const double> values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return idx;
}

/// 0-based dense ranks (equal values share a rank); returns the number of distinct values.
inline std::size_t dense_ranks(std::span<const double> values, std::vector<std::size_t>& out) {
    const auto idx = argsort(values);
    out.assign(values.size(), 0);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && values[idx[i]] != values[idx[i - 1]]) ++rank;
        out[idx[i]] = rank;
    }
    return values.empty() ? 0 : rank + 1;
}

}  // namespace rcusum::detail

#include "lowbw/pattern.hpp"

#include <algorithm>

#include "lowbw/common.hpp"

namespace lowbw {

SparsePattern SparsePattern::identity(std::int32_t n) {
    SparsePattern p(n);
    for (std::int32_t r = 0; r < n; ++r) p.rows_[r] = {r};
    return p;
}

SparsePattern SparsePattern::all_ones(std::int32_t n) {
    SparsePattern p(n);
    std::vector<std::int32_t> full(n);
    for (std::int32_t c = 0; c < n; ++c) full[c] = c;
    for (std::int32_t r = 0; r < n; ++r) p.rows_[r] = full;
    return p;
}

SparsePattern SparsePattern::from_entries(std::int32_t n,
                                          std::vector<std::pair<std::int32_t, std::int32_t>> entries) {
    SparsePattern p(n);
    for (auto [r, c] : entries) {
        check_input(r >= 0 && r < n && c >= 0 && c < n, "pattern entry out of range");
        p.rows_[r].push_back(c);
    }
    for (auto& row : p.rows_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return p;
}

SparsePattern SparsePattern::from_rows(std::int32_t n, std::vector<std::vector<std::int32_t>> rows) {
    check_input(static_cast<std::int32_t>(rows.size()) == n, "row count mismatch");
    SparsePattern p(n);
    p.rows_ = std::move(rows);
    return p;
}

std::int32_t SparsePattern::slot(std::int32_t r, std::int32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c);
    if (it == row.end() || *it != c) return -1;
    return static_cast<std::int32_t>(it - row.begin());
}

std::int64_t SparsePattern::nnz() const {
    std::int64_t total = 0;
    for (const auto& row : rows_) total += static_cast<std::int64_t>(row.size());
    return total;
}

std::vector<std::int32_t> SparsePattern::column_counts() const {
    std::vector<std::int32_t> counts(n_, 0);
    for (const auto& row : rows_)
        for (std::int32_t c : row) ++counts[c];
    return counts;
}

bool validate_uniform_sparsity(const SparsePattern& pattern, std::int32_t d) {
    const std::int32_t n = pattern.n();
    for (std::int32_t r = 0; r < n; ++r) {
        auto row = pattern.row(r);
        for (std::size_t s = 0; s < row.size(); ++s) {
            check_input(row[s] >= 0 && row[s] < n, "pattern column index out of range");
            check_input(s == 0 || row[s - 1] < row[s], "pattern row not strictly sorted");
        }
        if (static_cast<std::int32_t>(row.size()) > d) return false;
    }
    for (std::int32_t count : pattern.column_counts())
        if (count > d) return false;
    return true;
}

}  // namespace lowbw

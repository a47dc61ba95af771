#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lowbw {

/// Sparsity pattern of an n x n matrix: per row, the sorted list of
/// nonzero column indices.
class SparsePattern {
public:
    explicit SparsePattern(std::int32_t n) : n_(n), rows_(n) {}

    static SparsePattern identity(std::int32_t n);
    static SparsePattern all_ones(std::int32_t n);
    /// Sorts and deduplicates; throws on out-of-range indices.
    static SparsePattern from_entries(std::int32_t n, std::vector<std::pair<std::int32_t, std::int32_t>> entries);
    /// Trusts the caller (rows must already be sorted and in range).
    static SparsePattern from_rows(std::int32_t n, std::vector<std::vector<std::int32_t>> rows);

    std::int32_t n() const { return n_; }
    std::span<const std::int32_t> row(std::int32_t r) const { return rows_[r]; }
    const std::vector<std::vector<std::int32_t>>& rows() const { return rows_; }

    bool has(std::int32_t r, std::int32_t c) const { return slot(r, c) >= 0; }
    /// Position of c within row r, or -1.
    std::int32_t slot(std::int32_t r, std::int32_t c) const;

    std::int64_t nnz() const;
    std::vector<std::int32_t> column_counts() const;

    bool operator==(const SparsePattern&) const = default;

private:
    std::int32_t n_;
    std::vector<std::vector<std::int32_t>> rows_;
};

/// True iff every row and every column of the pattern has at most d
/// nonzeros. Throws std::invalid_argument on a structurally malformed
/// pattern (unsorted rows, duplicate or out-of-range indices).
bool validate_uniform_sparsity(const SparsePattern& pattern, std::int32_t d);

}  // namespace lowbw

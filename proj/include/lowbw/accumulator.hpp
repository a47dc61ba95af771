#pragma once

#include <span>
#include <vector>

#include "lowbw/pattern.hpp"
#include "lowbw/semiring.hpp"
#include "lowbw/triangles.hpp"

namespace lowbw {

/// Aligned with a pattern: grid[r][slot] is the value for the slot-th
/// nonzero of row r.
using ValueGrid = std::vector<std::vector<Value>>;

/// The running output: per requested (i, k) slot a semiring value,
/// initialized to zero, plus the processed-set ledger. The contract:
/// at all times X_ik equals the sum of A_ij * B_jk over the processed
/// triangles {i, j, k}.
class OutputAccumulator {
public:
    OutputAccumulator(const SparsePattern& pat_x, Semiring semiring);

    void add(std::int32_t i, std::int32_t k, Value v);
    void add_slot(std::int32_t i, std::int32_t slot, Value v);
    Value at(std::int32_t i, std::int32_t k) const;

    const ValueGrid& values() const { return values_; }
    const SparsePattern& pattern() const { return *pat_x_; }
    Semiring semiring() const { return semiring_; }

    void mark_processed(std::span<const Triangle> tris);
    std::span<const Triangle> processed_raw() const { return processed_; }
    /// Canonicalized ledger; throws if any triangle was processed twice.
    TriangleSet processed_set(std::int32_t n) const;

private:
    const SparsePattern* pat_x_;
    Semiring semiring_;
    ValueGrid values_;
    std::vector<Triangle> processed_;
};

}  // namespace lowbw

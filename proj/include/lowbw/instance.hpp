#pragma once

#include <vector>

#include "lowbw/pattern.hpp"
#include "lowbw/semiring.hpp"

namespace lowbw {

/// A supported-model problem instance: dimensions (n, d), the indicator
/// patterns of A, B and X, and runtime values for A and B aligned
/// slot-by-slot with their patterns. Storing values only in pattern
/// slots enforces the one-directional promise that an indicator zero
/// implies a value zero; a pattern slot may still carry a zero value.
struct TriInstance {
    std::int32_t n = 0;
    std::int32_t d = 0;
    Semiring semiring = Semiring::integers();
    SparsePattern pat_a{0}, pat_b{0}, pat_x{0};
    std::vector<std::vector<Value>> val_a, val_b;  // aligned with pat_a / pat_b rows

    Value a(std::int32_t i, std::int32_t j) const {
        std::int32_t s = pat_a.slot(i, j);
        return s < 0 ? semiring.zero() : val_a[i][s];
    }
    Value b(std::int32_t j, std::int32_t k) const {
        std::int32_t s = pat_b.slot(j, k);
        return s < 0 ? semiring.zero() : val_b[j][s];
    }

    /// Throws unless all three patterns pass uniform-sparsity validation
    /// for d and the value arrays align with their patterns.
    void validate() const;
};

/// Value rows aligned with a pattern, all slots set to `fill`.
std::vector<std::vector<Value>> aligned_values(const SparsePattern& pattern, Value fill);

}  // namespace lowbw

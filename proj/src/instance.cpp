#include "lowbw/instance.hpp"

#include "lowbw/common.hpp"

namespace lowbw {

void TriInstance::validate() const {
    check_input(n >= 1 && d >= 1 && n >= d, "need n >= d >= 1");
    check_input(pat_a.n() == n && pat_b.n() == n && pat_x.n() == n, "pattern dimension mismatch");
    check_input(validate_uniform_sparsity(pat_a, d), "A-hat is not uniformly d-sparse");
    check_input(validate_uniform_sparsity(pat_b, d), "B-hat is not uniformly d-sparse");
    check_input(validate_uniform_sparsity(pat_x, d), "X-hat is not uniformly d-sparse");
    check_input(static_cast<std::int32_t>(val_a.size()) == n && static_cast<std::int32_t>(val_b.size()) == n,
                "value row count mismatch");
    for (std::int32_t r = 0; r < n; ++r) {
        check_input(val_a[r].size() == pat_a.row(r).size(), "A values not aligned with pattern");
        check_input(val_b[r].size() == pat_b.row(r).size(), "B values not aligned with pattern");
    }
}

std::vector<std::vector<Value>> aligned_values(const SparsePattern& pattern, Value fill) {
    std::vector<std::vector<Value>> values(pattern.n());
    for (std::int32_t r = 0; r < pattern.n(); ++r)
        values[r].assign(pattern.row(r).size(), fill);
    return values;
}

}  // namespace lowbw

#include "lowbw/accumulator.hpp"

#include <algorithm>

#include "lowbw/common.hpp"

namespace lowbw {

OutputAccumulator::OutputAccumulator(const SparsePattern& pat_x, Semiring semiring)
    : pat_x_(&pat_x), semiring_(semiring) {
    values_.resize(pat_x.n());
    for (std::int32_t r = 0; r < pat_x.n(); ++r)
        values_[r].assign(pat_x.row(r).size(), semiring.zero());
}

void OutputAccumulator::add(std::int32_t i, std::int32_t k, Value v) {
    std::int32_t slot = pat_x_->slot(i, k);
    check_internal(slot >= 0, "accumulating into an output slot outside X-hat");
    add_slot(i, slot, v);
}

void OutputAccumulator::add_slot(std::int32_t i, std::int32_t slot, Value v) {
    values_[i][slot] = semiring_.add(values_[i][slot], v);
}

Value OutputAccumulator::at(std::int32_t i, std::int32_t k) const {
    std::int32_t slot = pat_x_->slot(i, k);
    check_input(slot >= 0, "output entry not requested by X-hat");
    return values_[i][slot];
}

void OutputAccumulator::mark_processed(std::span<const Triangle> tris) {
    processed_.insert(processed_.end(), tris.begin(), tris.end());
}

TriangleSet OutputAccumulator::processed_set(std::int32_t n) const {
    std::vector<Triangle> sorted(processed_.begin(), processed_.end());
    std::sort(sorted.begin(), sorted.end());
    check_internal(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                   "a triangle was processed twice");
    return TriangleSet::from_triangles(n, std::move(sorted));
}

}  // namespace lowbw

#include "lowbw/oracle.hpp"

#include "lowbw/common.hpp"

namespace lowbw {

namespace {

void oracle_row(const TriInstance& inst, std::int32_t i, std::vector<Value>& out) {
    const Semiring& sr = inst.semiring;
    auto row = inst.pat_x.row(i);
    out.assign(row.size(), sr.zero());
    for (std::size_t slot = 0; slot < row.size(); ++slot) {
        std::int32_t k = row[slot];
        Value sum = sr.zero();
        for (std::int32_t j = 0; j < inst.n; ++j)
            sum = sr.add(sum, sr.mul(inst.a(i, j), inst.b(j, k)));
        out[slot] = sum;
    }
}

}  // namespace

ValueGrid oracle_multiply(const TriInstance& inst) {
    ValueGrid x(inst.n);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int32_t i = 0; i < inst.n; ++i) oracle_row(inst, i, x[i]);
    return x;
}

ValueGrid oracle_multiply_serial(const TriInstance& inst) {
    ValueGrid x(inst.n);
    for (std::int32_t i = 0; i < inst.n; ++i) oracle_row(inst, i, x[i]);
    return x;
}

ValueGrid oracle_over_set(const TriInstance& inst, std::span<const Triangle> tris) {
    const Semiring& sr = inst.semiring;
    ValueGrid x(inst.n);
    for (std::int32_t i = 0; i < inst.n; ++i) x[i].assign(inst.pat_x.row(i).size(), sr.zero());
    for (const Triangle& t : tris) {
        std::int32_t slot = inst.pat_x.slot(t.i, t.k);
        check_input(slot >= 0, "triangle without a requested output entry");
        x[t.i][slot] = sr.add(x[t.i][slot], sr.mul(inst.a(t.i, t.j), inst.b(t.j, t.k)));
    }
    return x;
}

bool grids_equal(const ValueGrid& a, const ValueGrid& b) { return a == b; }

}  // namespace lowbw

#pragma once

#include "lowbw/accumulator.hpp"
#include "lowbw/instance.hpp"

namespace lowbw {

/// Direct triple-loop product: for every requested (i, k), the sum over
/// all j of A_ij * B_jk. Deliberately independent of the simulator
/// pipeline; this is the reference every distributed result is checked
/// against. The OpenMP kernel splits output rows across threads; the
/// serial variant is kept for testing and benchmarking.
ValueGrid oracle_multiply(const TriInstance& inst);
ValueGrid oracle_multiply_serial(const TriInstance& inst);

/// Partial-product oracle: the sum restricted to a given triangle set,
/// i.e. what a correct accumulator must hold after processing exactly
/// those triangles.
ValueGrid oracle_over_set(const TriInstance& inst, std::span<const Triangle> tris);

bool grids_equal(const ValueGrid& a, const ValueGrid& b);

}  // namespace lowbw

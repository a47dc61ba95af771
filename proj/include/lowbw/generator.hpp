#pragma once

#include <cstdint>

#include "lowbw/instance.hpp"

namespace lowbw {

enum class GenKind { random_uniform, planted_clusters, planted_bad_node, bounded_degree_graph };

GenKind gen_kind_from_name(std::string_view name);
std::string_view gen_kind_name(GenKind kind);

/// Instance generators. Every generated instance passes uniform
/// sparsity validation.
///
///   random_uniform      — independent random patterns, `density` is the
///                         target fraction of the d*n nonzero budget per
///                         pattern
///   planted_clusters    — floor(n/d) disjoint full clusters, d^3
///                         triangles each (the saturating construction)
///   planted_bad_node    — one I-node in ~d^2 triangles plus sparse
///                         background at `density`
///   bounded_degree_graph — symmetric adjacency with max degree <= d,
///                         A = B = X-hat = adjacency, all values one
struct GeneratorSpec {
    GenKind kind = GenKind::random_uniform;
    std::int32_t n = 16;
    std::int32_t d = 4;
    double density = 1.0;
    std::uint64_t seed = 0;
    Semiring semiring = Semiring::integers();
};

TriInstance generate(const GeneratorSpec& spec);

}  // namespace lowbw

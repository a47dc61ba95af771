#pragma once

// Shared fixtures and independent oracles for the test suites. The
// oracles here stay deliberately naive: triple loops over the full
// index space, no reuse of library shortcuts.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "lowbw/generator.hpp"
#include "lowbw/instance.hpp"
#include "lowbw/triangles.hpp"

namespace lowbw::testing {

// n^3 reference enumeration: try every (i, j, k).
inline std::vector<Triangle> brute_enumerate(const TriInstance& inst) {
    std::vector<Triangle> out;
    for (std::int32_t i = 0; i < inst.n; ++i)
        for (std::int32_t j = 0; j < inst.n; ++j)
            for (std::int32_t k = 0; k < inst.n; ++k)
                if (inst.pat_a.has(i, j) && inst.pat_b.has(j, k) && inst.pat_x.has(i, k))
                    out.push_back(Triangle{i, j, k});
    return out;
}

inline TriInstance random_instance(std::int32_t n, std::int32_t d, std::uint64_t seed,
                                   Semiring sr = Semiring::integers(), double density = 1.0) {
    GeneratorSpec spec;
    spec.kind = GenKind::random_uniform;
    spec.n = n;
    spec.d = d;
    spec.density = density;
    spec.seed = seed;
    spec.semiring = sr;
    return generate(spec);
}

inline TriInstance planted_instance(std::int32_t n, std::int32_t d, std::uint64_t seed,
                                    Semiring sr = Semiring::integers()) {
    GeneratorSpec spec;
    spec.kind = GenKind::planted_clusters;
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    spec.semiring = sr;
    return generate(spec);
}

// Uniform subsample of a triangle set down to `target` triangles.
inline TriangleSet subsample(const TriangleSet& t, std::int64_t target, std::uint64_t seed) {
    std::vector<Triangle> tris(t.triangles().begin(), t.triangles().end());
    std::mt19937_64 rng(seed);
    std::shuffle(tris.begin(), tris.end(), rng);
    if (target < static_cast<std::int64_t>(tris.size())) tris.resize(target);
    return TriangleSet::from_triangles(t.n(), std::move(tris));
}

// Random node relabeling of a triangle set (per side), preserving all
// structural bounds while hiding the planted layout.
inline TriangleSet relabel(const TriangleSet& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::array<std::vector<std::int32_t>, 3> perm;
    for (auto& p : perm) {
        p.resize(t.n());
        for (std::int32_t v = 0; v < t.n(); ++v) p[v] = v;
        std::shuffle(p.begin(), p.end(), rng);
    }
    std::vector<Triangle> tris;
    tris.reserve(t.size());
    for (const Triangle& tri : t.triangles())
        tris.push_back(Triangle{perm[0][tri.i], perm[1][tri.j], perm[2][tri.k]});
    return TriangleSet::from_triangles(t.n(), std::move(tris));
}

}  // namespace lowbw::testing

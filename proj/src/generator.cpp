#include "lowbw/generator.hpp"

#include <algorithm>
#include <random>

#include "lowbw/common.hpp"

namespace lowbw {

GenKind gen_kind_from_name(std::string_view name) {
    if (name == "random" || name == "random-uniform") return GenKind::random_uniform;
    if (name == "planted-clusters") return GenKind::planted_clusters;
    if (name == "planted-bad-node") return GenKind::planted_bad_node;
    if (name == "graph" || name == "bounded-degree-graph") return GenKind::bounded_degree_graph;
    throw std::invalid_argument("unknown generator kind: " + std::string(name));
}

std::string_view gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::random_uniform: return "random-uniform";
        case GenKind::planted_clusters: return "planted-clusters";
        case GenKind::planted_bad_node: return "planted-bad-node";
        case GenKind::bounded_degree_graph: return "bounded-degree-graph";
    }
    return "?";
}

namespace {

// Add random entries respecting per-row/per-column caps until `target`
// entries are placed or attempts run out.
void fill_random(std::vector<std::vector<std::int32_t>>& rows, std::int32_t n, std::int32_t d,
                 std::int64_t target, std::mt19937_64& rng) {
    std::vector<std::int32_t> row_cnt(n, 0), col_cnt(n, 0);
    for (std::int32_t r = 0; r < n; ++r) {
        row_cnt[r] = static_cast<std::int32_t>(rows[r].size());
        for (std::int32_t c : rows[r]) ++col_cnt[c];
    }
    std::int64_t placed = 0;
    for (auto& row : rows) placed += static_cast<std::int64_t>(row.size());

    std::uniform_int_distribution<std::int32_t> pick(0, n - 1);
    std::int64_t attempts = 0, max_attempts = 64 * target + 256;
    while (placed < target && attempts < max_attempts) {
        ++attempts;
        std::int32_t r = pick(rng), c = pick(rng);
        if (row_cnt[r] >= d || col_cnt[c] >= d) continue;
        if (std::find(rows[r].begin(), rows[r].end(), c) != rows[r].end()) continue;
        rows[r].push_back(c);
        ++row_cnt[r];
        ++col_cnt[c];
        ++placed;
    }
    for (auto& row : rows) std::sort(row.begin(), row.end());
}

std::vector<std::vector<Value>> random_values(const SparsePattern& pat, const Semiring& sr,
                                              std::mt19937_64& rng) {
    auto vals = aligned_values(pat, sr.zero());
    for (std::int32_t r = 0; r < pat.n(); ++r)
        for (std::size_t s = 0; s < vals[r].size(); ++s) vals[r][s] = sr.sample(rng);
    return vals;
}

TriInstance gen_random_uniform(const GeneratorSpec& spec) {
    check_input(spec.density >= 0.0 && spec.density <= 1.0,
                "density must be in [0, 1] (fraction of the d*n nonzero budget)");
    std::mt19937_64 rng(mix_seed(spec.seed, 0x01));
    TriInstance inst;
    inst.n = spec.n;
    inst.d = spec.d;
    inst.semiring = spec.semiring;
    auto target = static_cast<std::int64_t>(spec.density * static_cast<double>(spec.d) * spec.n);
    for (SparsePattern* pat : {&inst.pat_a, &inst.pat_b, &inst.pat_x}) {
        std::vector<std::vector<std::int32_t>> rows(spec.n);
        fill_random(rows, spec.n, spec.d, target, rng);
        *pat = SparsePattern::from_rows(spec.n, std::move(rows));
    }
    inst.val_a = random_values(inst.pat_a, inst.semiring, rng);
    inst.val_b = random_values(inst.pat_b, inst.semiring, rng);
    return inst;
}

TriInstance gen_planted_clusters(const GeneratorSpec& spec) {
    std::mt19937_64 rng(mix_seed(spec.seed, 0x02));
    const std::int32_t groups = spec.n / spec.d;
    std::vector<std::vector<std::int32_t>> rows(spec.n);
    for (std::int32_t g = 0; g < groups; ++g) {
        for (std::int32_t r = g * spec.d; r < (g + 1) * spec.d; ++r)
            for (std::int32_t c = g * spec.d; c < (g + 1) * spec.d; ++c) rows[r].push_back(c);
    }
    TriInstance inst;
    inst.n = spec.n;
    inst.d = spec.d;
    inst.semiring = spec.semiring;
    inst.pat_a = SparsePattern::from_rows(spec.n, rows);
    inst.pat_b = SparsePattern::from_rows(spec.n, rows);
    inst.pat_x = SparsePattern::from_rows(spec.n, rows);
    inst.val_a = random_values(inst.pat_a, inst.semiring, rng);
    inst.val_b = random_values(inst.pat_b, inst.semiring, rng);
    return inst;
}

TriInstance gen_planted_bad_node(const GeneratorSpec& spec) {
    check_input(spec.density >= 0.0 && spec.density <= 1.0, "density must be in [0, 1]");
    std::mt19937_64 rng(mix_seed(spec.seed, 0x03));
    const std::int32_t n = spec.n, d = spec.d;
    // the fan: I-node 0 sees J-nodes 0..d-1, each of which sees
    // K-nodes 0..d-1, and all d outputs of row 0 are requested
    std::vector<std::vector<std::int32_t>> rows_a(n), rows_b(n), rows_x(n);
    for (std::int32_t j = 0; j < d; ++j) rows_a[0].push_back(j);
    for (std::int32_t j = 0; j < d; ++j)
        for (std::int32_t k = 0; k < d; ++k) rows_b[j].push_back(k);
    for (std::int32_t k = 0; k < d; ++k) rows_x[0].push_back(k);

    // sparse background away from the fan
    auto target = static_cast<std::int64_t>(spec.density * static_cast<double>(d) * n / 4);
    fill_random(rows_a, n, d, target + static_cast<std::int64_t>(rows_a[0].size()), rng);
    fill_random(rows_x, n, d, target + static_cast<std::int64_t>(rows_x[0].size()), rng);

    TriInstance inst;
    inst.n = n;
    inst.d = d;
    inst.semiring = spec.semiring;
    inst.pat_a = SparsePattern::from_rows(n, std::move(rows_a));
    inst.pat_b = SparsePattern::from_rows(n, std::move(rows_b));
    inst.pat_x = SparsePattern::from_rows(n, std::move(rows_x));
    inst.val_a = random_values(inst.pat_a, inst.semiring, rng);
    inst.val_b = random_values(inst.pat_b, inst.semiring, rng);
    return inst;
}

TriInstance gen_bounded_degree_graph(const GeneratorSpec& spec) {
    check_input(spec.density >= 0.0 && spec.density <= 1.0, "density must be in [0, 1]");
    std::mt19937_64 rng(mix_seed(spec.seed, 0x04));
    const std::int32_t n = spec.n, d = spec.d;
    std::vector<std::vector<std::int32_t>> adj(n);
    std::vector<std::int32_t> deg(n, 0);
    auto target_edges = static_cast<std::int64_t>(spec.density * static_cast<double>(d) * n / 2);
    std::uniform_int_distribution<std::int32_t> pick(0, n - 1);
    std::int64_t placed = 0, attempts = 0, max_attempts = 64 * target_edges + 256;
    while (placed < target_edges && attempts < max_attempts) {
        ++attempts;
        std::int32_t u = pick(rng), v = pick(rng);
        if (u == v || deg[u] >= d || deg[v] >= d) continue;
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++deg[u];
        ++deg[v];
        ++placed;
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());

    TriInstance inst;
    inst.n = n;
    inst.d = d;
    inst.semiring = spec.semiring;
    inst.pat_a = SparsePattern::from_rows(n, adj);
    inst.pat_b = SparsePattern::from_rows(n, adj);
    inst.pat_x = SparsePattern::from_rows(n, adj);
    inst.val_a = aligned_values(inst.pat_a, inst.semiring.one());
    inst.val_b = aligned_values(inst.pat_b, inst.semiring.one());
    return inst;
}

}  // namespace

TriInstance generate(const GeneratorSpec& spec) {
    check_input(spec.n >= spec.d && spec.d >= 1, "need n >= d >= 1");
    TriInstance inst;
    switch (spec.kind) {
        case GenKind::random_uniform: inst = gen_random_uniform(spec); break;
        case GenKind::planted_clusters: inst = gen_planted_clusters(spec); break;
        case GenKind::planted_bad_node: inst = gen_planted_bad_node(spec); break;
        case GenKind::bounded_degree_graph: inst = gen_bounded_degree_graph(spec); break;
    }
    inst.validate();
    return inst;
}

}  // namespace lowbw

#include "lowbw/triangles.hpp"

#include <algorithm>

#include "lowbw/common.hpp"

namespace lowbw {

TriangleSet TriangleSet::from_triangles(std::int32_t n, std::vector<Triangle> tris) {
    TriangleSet s(n);
    std::sort(tris.begin(), tris.end());
    tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
    for (const Triangle& t : tris) {
        check_input(t.i >= 0 && t.i < n && t.j >= 0 && t.j < n && t.k >= 0 && t.k < n,
                    "triangle corner out of range");
    }
    s.tris_ = std::move(tris);
    s.rebuild_index();
    return s;
}

void TriangleSet::rebuild_index() {
    for (auto& side : incidence_) {
        side.clear();
        side.resize(n_);
    }
    for (std::size_t pos = 0; pos < tris_.size(); ++pos) {
        const Triangle& t = tris_[pos];
        incidence_[0][t.i].push_back(static_cast<std::int32_t>(pos));
        incidence_[1][t.j].push_back(static_cast<std::int32_t>(pos));
        incidence_[2][t.k].push_back(static_cast<std::int32_t>(pos));
    }
}

std::int64_t TriangleSet::max_load() const {
    std::int64_t m = 0;
    for (const auto& side : incidence_)
        for (const auto& list : side) m = std::max(m, static_cast<std::int64_t>(list.size()));
    return m;
}

bool TriangleSet::contains(const Triangle& t) const {
    return std::binary_search(tris_.begin(), tris_.end(), t);
}

TriangleSet TriangleSet::filter(const std::vector<char>& keep) const {
    check_internal(keep.size() == tris_.size(), "filter mask size mismatch");
    TriangleSet out(n_);
    for (std::size_t pos = 0; pos < tris_.size(); ++pos)
        if (keep[pos]) out.tris_.push_back(tris_[pos]);
    out.rebuild_index();
    return out;
}

namespace {

// Row kernel shared by the parallel and serial enumerators: all
// triangles with a fixed I-corner. Rows are sorted, so the output is
// already in canonical (i, j, k) order.
void enumerate_row(const TriInstance& inst, std::int32_t i, std::vector<Triangle>& out) {
    for (std::int32_t j : inst.pat_a.row(i)) {
        for (std::int32_t k : inst.pat_b.row(j)) {
            if (inst.pat_x.has(i, k)) out.push_back(Triangle{i, j, k});
        }
    }
}

}  // namespace

TriangleSet enumerate_triangles(const TriInstance& inst) {
    const std::int32_t n = inst.n;
    std::vector<std::vector<Triangle>> per_row(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int32_t i = 0; i < n; ++i) enumerate_row(inst, i, per_row[i]);

    std::vector<Triangle> all;
    std::size_t total = 0;
    for (const auto& row : per_row) total += row.size();
    all.reserve(total);
    for (auto& row : per_row) all.insert(all.end(), row.begin(), row.end());
    return TriangleSet::from_triangles(n, std::move(all));
}

TriangleSet enumerate_triangles_serial(const TriInstance& inst) {
    std::vector<Triangle> all;
    std::vector<Triangle> row;
    for (std::int32_t i = 0; i < inst.n; ++i) {
        row.clear();
        enumerate_row(inst, i, row);
        all.insert(all.end(), row.begin(), row.end());
    }
    return TriangleSet::from_triangles(inst.n, std::move(all));
}

bool Cluster::contains(const Triangle& t) const {
    return std::binary_search(i_nodes.begin(), i_nodes.end(), t.i) &&
           std::binary_search(j_nodes.begin(), j_nodes.end(), t.j) &&
           std::binary_search(k_nodes.begin(), k_nodes.end(), t.k);
}

bool Cluster::touches(const Triangle& t) const {
    return std::binary_search(i_nodes.begin(), i_nodes.end(), t.i) ||
           std::binary_search(j_nodes.begin(), j_nodes.end(), t.j) ||
           std::binary_search(k_nodes.begin(), k_nodes.end(), t.k);
}

TriangleSet triangles_in_cluster(const TriangleSet& t, const Cluster& u) {
    std::vector<char> keep(t.size(), 0);
    std::vector<char> in_j(t.n(), 0), in_k(t.n(), 0);
    for (std::int32_t j : u.j_nodes) in_j[j] = 1;
    for (std::int32_t k : u.k_nodes) in_k[k] = 1;
    for (std::int32_t i : u.i_nodes) {
        for (std::int32_t pos : t.incident(Side::I, i)) {
            const Triangle& tri = t.at(pos);
            if (in_j[tri.j] && in_k[tri.k]) keep[pos] = 1;
        }
    }
    return t.filter(keep);
}

std::int64_t BipartiteAdj::edges() const {
    std::int64_t total = 0;
    for (const auto& list : fwd) total += static_cast<std::int64_t>(list.size());
    return total;
}

std::int64_t SupportGraph::degree(Side side, std::int32_t index) const {
    switch (side) {
        case Side::I: return static_cast<std::int64_t>(ij.fwd[index].size() + ik.fwd[index].size());
        case Side::J: return static_cast<std::int64_t>(ij.rev[index].size() + jk.fwd[index].size());
        default: return static_cast<std::int64_t>(ik.rev[index].size() + jk.rev[index].size());
    }
}

std::int64_t SupportGraph::max_degree() const {
    std::int64_t m = 0;
    for (std::int32_t v = 0; v < n; ++v)
        for (Side s : {Side::I, Side::J, Side::K}) m = std::max(m, degree(s, v));
    return m;
}

namespace {

void sort_unique(std::vector<std::vector<std::int32_t>>& lists) {
    for (auto& list : lists) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

}  // namespace

SupportGraph support_graph(const TriangleSet& t) {
    SupportGraph g;
    g.n = t.n();
    for (BipartiteAdj* adj : {&g.ij, &g.jk, &g.ik}) {
        adj->fwd.resize(g.n);
        adj->rev.resize(g.n);
    }
    for (const Triangle& tri : t.triangles()) {
        g.ij.fwd[tri.i].push_back(tri.j);
        g.ij.rev[tri.j].push_back(tri.i);
        g.jk.fwd[tri.j].push_back(tri.k);
        g.jk.rev[tri.k].push_back(tri.j);
        g.ik.fwd[tri.i].push_back(tri.k);
        g.ik.rev[tri.k].push_back(tri.i);
    }
    for (BipartiteAdj* adj : {&g.ij, &g.jk, &g.ik}) {
        sort_unique(adj->fwd);
        sort_unique(adj->rev);
    }
    return g;
}

}  // namespace lowbw

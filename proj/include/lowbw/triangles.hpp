#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "lowbw/instance.hpp"
#include "lowbw/node.hpp"

namespace lowbw {

/// A triple {i, j, k} with A-hat_ij, B-hat_jk and X-hat_ik all nonzero:
/// one potentially contributing product term A_ij * B_jk in X_ik.
struct Triangle {
    std::int32_t i, j, k;
    auto operator<=>(const Triangle&) const = default;
};

/// A set of triangles over a fixed node universe of size 3n, stored in
/// canonical (i, j, k) order with an eagerly built per-node incidence
/// index. Immutable after construction.
class TriangleSet {
public:
    explicit TriangleSet(std::int32_t n) : n_(n) { rebuild_index(); }
    static TriangleSet from_triangles(std::int32_t n, std::vector<Triangle> tris);

    std::int32_t n() const { return n_; }
    std::int64_t size() const { return static_cast<std::int64_t>(tris_.size()); }
    bool empty() const { return tris_.empty(); }
    std::span<const Triangle> triangles() const { return tris_; }
    const Triangle& at(std::int64_t pos) const { return tris_[pos]; }

    /// Positions (into triangles()) of the triangles touching a node.
    const std::vector<std::int32_t>& incident(Side side, std::int32_t index) const {
        return incidence_[static_cast<int>(side)][index];
    }
    std::int64_t load(Side side, std::int32_t index) const {
        return static_cast<std::int64_t>(incident(side, index).size());
    }
    std::int64_t max_load() const;

    bool contains(const Triangle& t) const;

    /// Keep exactly the triangles whose positions are flagged.
    TriangleSet filter(const std::vector<char>& keep) const;

    bool operator==(const TriangleSet& other) const {
        return n_ == other.n_ && tris_ == other.tris_;
    }

private:
    void rebuild_index();

    std::int32_t n_;
    std::vector<Triangle> tris_;
    std::array<std::vector<std::vector<std::int32_t>>, 3> incidence_;
};

/// All triangles of an instance. The OpenMP kernel splits rows of A-hat
/// across threads; the serial variant is the reference kept for testing
/// and benchmarking.
TriangleSet enumerate_triangles(const TriInstance& inst);
TriangleSet enumerate_triangles_serial(const TriInstance& inst);

/// d nodes from each of I, J and K; the unit of in-cluster dense
/// multiplication. Node lists are sorted.
struct Cluster {
    std::vector<std::int32_t> i_nodes, j_nodes, k_nodes;

    const std::vector<std::int32_t>& side(Side s) const {
        switch (s) {
            case Side::I: return i_nodes;
            case Side::J: return j_nodes;
            default: return k_nodes;
        }
    }
    bool contains(const Triangle& t) const;
    bool touches(const Triangle& t) const;
};

/// T[U]: the triangles of T contained entirely in U.
TriangleSet triangles_in_cluster(const TriangleSet& t, const Cluster& u);

/// Adjacency between two sides of the support graph, both directions.
struct BipartiteAdj {
    std::vector<std::vector<std::int32_t>> fwd, rev;  // fwd: left -> right
    std::int64_t edges() const;
};

/// G(T): edge {u, v} present iff some triangle of T contains both.
struct SupportGraph {
    std::int32_t n = 0;
    BipartiteAdj ij, jk, ik;

    std::int64_t degree(Side side, std::int32_t index) const;
    std::int64_t max_degree() const;
    std::int64_t jk_edge_count() const { return jk.edges(); }
};

SupportGraph support_graph(const TriangleSet& t);

}  // namespace lowbw

#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lowbw/triangles.hpp"

namespace lowbw {

/// One decomposition iteration: peel clustered layers until fewer than
/// d^(2-eps2) n triangles remain, finding clusters at eps = eps2 + delta.
struct ScheduleRow {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double delta = 0.0;
};

/// Built-in schedules. table1 is tuned for ring pipelines, table2 for
/// semiring pipelines; `simplified` is the single-row teaching schedule.
std::vector<ScheduleRow> schedule_table1();
std::vector<ScheduleRow> schedule_table2();
std::vector<ScheduleRow> schedule_simplified();

/// Rows of `eps1 eps2 delta`, '#' comments allowed.
std::vector<ScheduleRow> parse_schedule(std::istream& in);
/// A preset name (table1 | table2 | simplified) or a schedule file path.
std::vector<ScheduleRow> resolve_schedule(const std::string& name_or_path);

/// Throws unless rows chain (first eps1 = 0, next eps1 = previous eps2)
/// and each row has eps1 < eps2 and delta > 0.
void validate_schedule(const std::vector<ScheduleRow>& schedule);

/// The explicit smallness rule: d is large enough for the layer-yield
/// guarantees iff d^delta >= 2 for every row. Below this the pipeline
/// brute-forces instead of decomposing.
bool schedule_large_d(std::int32_t d, const std::vector<ScheduleRow>& schedule);

/// The eps the small-component phase runs at after this schedule:
/// pinned 0.186 / 0.146 for the shipped tables, eps2 of the last row
/// otherwise.
double small_component_eps(const std::vector<ScheduleRow>& schedule);

/// Triangles partitioned into node-disjoint clusters; every triangle
/// lies in exactly one cluster.
struct ClusteredSet {
    std::vector<Cluster> clusters;
    std::vector<std::vector<Triangle>> per_cluster;  // aligned with clusters

    std::int64_t size() const;
    std::vector<Triangle> all_triangles() const;
    /// Definition check: equal sizes d per side, pairwise disjoint
    /// clusters, each triangle inside its cluster. Throws on violation.
    void validate(std::int32_t n, std::int32_t d) const;
};

/// Layered decomposition P^1 ... P^L plus the residual small component.
struct Decomposition {
    std::vector<ClusteredSet> layers;
    TriangleSet residual;
    std::vector<ScheduleRow> schedule;

    std::int64_t clustered_triangles() const;
};

/// Per-I-node labels used by the cluster search: t = triangles into the
/// pivot's corner sets, y/z = edges into J0/K0, e = y + z.
struct NodeLabels {
    std::vector<std::int64_t> t, y, z, e;
};

struct ClusterSearchState {
    TriangleSet heavy;                     // the heavy triangles T_0
    std::int32_t pivot = -1;               // the I-node x
    std::vector<std::int32_t> j0, k0;      // corner sets before padding
    NodeLabels labels;
    std::vector<std::int32_t> top_i;       // I_0: the d best I-nodes
    std::int64_t sum_top = 0;              // T_0 = sum of t over I_0
    std::int64_t sum_rest = 0;             // T_1
    std::int64_t min_top = 0;              // t_0
};

struct ClusterSearchResult {
    Cluster cluster;
    std::int64_t count = 0;                // |T[U]| by direct recount
    ClusterSearchState state;
};

/// Node-availability mask per side, used to keep clusters of one layer
/// disjoint deterministically.
class UsedNodes {
public:
    explicit UsedNodes(std::int32_t n) {
        for (auto& side : used_) side.assign(n, 0);
    }
    bool is_used(Side s, std::int32_t v) const { return used_[static_cast<int>(s)][v] != 0; }
    void mark(const Cluster& u);
    std::int32_t unused_count(Side s) const;

private:
    std::array<std::vector<char>, 3> used_;
};

/// Triangles whose J-K edge lies in at least d^(1-eps)/2 triangles of T.
TriangleSet find_heavy_triangles(const TriangleSet& t, double eps, std::int32_t d);

/// Find one cluster containing at least d^(3-4 eps)/24 triangles.
/// Requires n >= d and |T| >= d^(2-eps) n. The construction: heavy
/// filtering, a pivot with at least d^(2-eps)/2 heavy triangles, corner
/// sets J0/K0, labels, the top-d I-nodes, then padding to size d from
/// unused nodes.
ClusterSearchResult find_one_cluster(const TriangleSet& t, double eps, std::int32_t d,
                                     const UsedNodes* used = nullptr);

struct LayerResult {
    ClusteredSet layer;
    TriangleSet rest;
};

/// Peel one clustered layer: repeatedly take a cluster (at
/// eps = eps2 + delta), move its triangles into the layer and all
/// triangles touching it into the rest, until fewer than
/// d^(2-eps2-delta) n triangles remain. If |T| < d^(2-eps2) n the layer
/// is empty and rest = T.
LayerResult extract_clustered_layer(const TriangleSet& t, double eps2, double delta,
                                    std::int32_t d);

struct LayersResult {
    std::vector<ClusteredSet> layers;
    TriangleSet residual;
};

/// Apply extract_clustered_layer until at most d^(2-eps2) n triangles
/// remain. Requires |T| <= d^(2-eps1) n.
LayersResult decompose_layers(const TriangleSet& t, const ScheduleRow& row, std::int32_t d);

/// Run a whole schedule, chaining rows; layers concatenate across rows
/// and the residual is the last row's leftover.
Decomposition schedule_decompose(const TriangleSet& t, std::vector<ScheduleRow> schedule,
                                 std::int32_t d);

}  // namespace lowbw

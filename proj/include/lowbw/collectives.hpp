#pragma once

#include <vector>

#include "lowbw/engine.hpp"
#include "lowbw/semiring.hpp"

namespace lowbw {

/// A payload without addressing: one semiring element plus metadata.
struct Payload {
    Value value = 0;
    std::array<std::int32_t, 4> meta{};
};

/// Complete binary tree over {root} u members, rooted at the root, with
/// members sorted by node id. Heap indexing: children of position p are
/// 2p+1 and 2p+2.
struct TreeSchedule {
    std::int32_t root = -1;
    std::vector<std::int32_t> nodes;  // nodes[0] == root, then sorted members

    std::size_t size() const { return nodes.size(); }
    std::int32_t parent_pos(std::size_t pos) const { return static_cast<std::int32_t>((pos - 1) / 2); }
    bool has_child(std::size_t pos, int which) const { return 2 * pos + 1 + which < nodes.size(); }
    std::size_t child_pos(std::size_t pos, int which) const { return 2 * pos + 1 + which; }
};

TreeSchedule make_tree(std::int32_t root, std::vector<std::int32_t> members);

/// Pipelined top-down broadcast: the root holds `messages` and every
/// member must receive all of them. Each node forwards message m to its
/// children in consecutive rounds (left then right) and starts message
/// m+1 immediately after. Takes at most 2d + 2*ceil(log2(k+1)) + 4
/// rounds for d messages and k members; only {root} u members
/// communicate.
Program broadcast_program(const TreeSchedule& tree, std::span<const Payload> messages);

std::int64_t broadcast_tree(RoundEngine& engine, std::int32_t root,
                            std::vector<std::int32_t> members, std::span<const Payload> messages,
                            const MessageSink& sink = {});

/// Pipelined bottom-up sum: member u holds values[u][0..d); the root
/// must learn the index-wise sums. Interior nodes fold their own values
/// into what they forward; left/right siblings alternate rounds so the
/// parent receives at most one message per round. Same round bound as
/// the broadcast.
struct ConvergecastPlan {
    Program program;
    std::vector<Value> root_sums;
};

ConvergecastPlan convergecast_program(const TreeSchedule& tree,
                                      const std::vector<std::vector<Value>>& member_values,
                                      const Semiring& semiring);

/// Runs the plan; `out_sums` receives what the root learned. Returns
/// rounds used.
std::int64_t convergecast_sum(RoundEngine& engine, std::int32_t root,
                              std::vector<std::int32_t> members,
                              const std::vector<std::vector<Value>>& member_values,
                              const Semiring& semiring, std::vector<Value>& out_sums,
                              const MessageSink& sink = {});

}  // namespace lowbw

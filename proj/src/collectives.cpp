#include "lowbw/collectives.hpp"

#include <algorithm>
#include <deque>

#include "lowbw/common.hpp"

namespace lowbw {

TreeSchedule make_tree(std::int32_t root, std::vector<std::int32_t> members) {
    std::sort(members.begin(), members.end());
    check_input(std::adjacent_find(members.begin(), members.end()) == members.end(),
                "duplicate tree member");
    check_input(!std::binary_search(members.begin(), members.end(), root),
                "root cannot also be a member");
    TreeSchedule tree;
    tree.root = root;
    tree.nodes.reserve(members.size() + 1);
    tree.nodes.push_back(root);
    tree.nodes.insert(tree.nodes.end(), members.begin(), members.end());
    return tree;
}

Program broadcast_program(const TreeSchedule& tree, std::span<const Payload> messages) {
    const std::size_t size = tree.size();
    Program program;
    if (size <= 1 || messages.empty()) return program;

    // Per tree position: FIFO of (message, child) forwards. A node
    // receives from its parent at most once per round and its parent
    // alternates children, so queues stay short and every node sends at
    // most one message per round.
    std::vector<std::deque<std::pair<std::int32_t, std::size_t>>> pending(size);
    for (std::int32_t m = 0; m < static_cast<std::int32_t>(messages.size()); ++m)
        for (int which : {0, 1})
            if (tree.has_child(0, which)) pending[0].emplace_back(m, tree.child_pos(0, which));

    while (true) {
        std::vector<Message> batch;
        std::vector<std::pair<std::size_t, std::int32_t>> arrivals;  // (position, message)
        for (std::size_t p = 0; p < size; ++p) {
            if (pending[p].empty()) continue;
            auto [m, child] = pending[p].front();
            pending[p].pop_front();
            Message msg;
            msg.src = tree.nodes[p];
            msg.dst = tree.nodes[child];
            msg.value = messages[m].value;
            msg.meta = messages[m].meta;
            batch.push_back(msg);
            arrivals.emplace_back(child, m);
        }
        if (batch.empty()) break;
        for (auto [child, m] : arrivals)
            for (int which : {0, 1})
                if (tree.has_child(child, which)) pending[child].emplace_back(m, tree.child_pos(child, which));
        program.push_back(std::move(batch));
    }
    return program;
}

std::int64_t broadcast_tree(RoundEngine& engine, std::int32_t root,
                            std::vector<std::int32_t> members, std::span<const Payload> messages,
                            const MessageSink& sink) {
    TreeSchedule tree = make_tree(root, std::move(members));
    return run_program(engine, broadcast_program(tree, messages), sink);
}

ConvergecastPlan convergecast_program(const TreeSchedule& tree,
                                      const std::vector<std::vector<Value>>& member_values,
                                      const Semiring& semiring) {
    const std::size_t size = tree.size();
    check_input(member_values.size() + 1 == size, "one value row per member required");
    std::size_t d = 0;
    for (const auto& row : member_values) d = std::max(d, row.size());
    for (const auto& row : member_values)
        check_input(row.size() == d, "members must hold the same number of values");

    ConvergecastPlan plan;
    plan.root_sums.assign(d, semiring.zero());
    if (size <= 1 || d == 0) return plan;

    auto own = [&](std::size_t p, std::size_t i) { return member_values[p - 1][i]; };

    // Per position: semiring-accumulated child contributions and the
    // number of indices fully received from each child. Children
    // deliver indices in order, so per-child progress is a prefix.
    std::vector<std::vector<Value>> recv(size, std::vector<Value>(d, semiring.zero()));
    std::vector<std::array<std::size_t, 2>> child_done(size, {0, 0});
    std::vector<std::size_t> next_send(size, 0);

    // Indices ready to leave position p: own values are always at hand,
    // interior nodes also need every child's contribution first.
    auto ready = [&](std::size_t p) {
        std::size_t r = d;
        for (int which : {0, 1})
            if (tree.has_child(p, which)) r = std::min(r, child_done[p][which]);
        return r;
    };
    // Left children (odd positions) send on odd rounds, right children
    // on even rounds, so a parent receives at most once per round; an
    // only child may send every round.
    auto may_send = [&](std::size_t p, std::int64_t round) {
        bool is_left = (p % 2) == 1;
        if (is_left && !tree.has_child(tree.parent_pos(p), 1)) return true;
        return is_left ? (round % 2 == 1) : (round % 2 == 0);
    };

    std::size_t finished = 0;
    std::int64_t round = 0;
    while (finished < size - 1) {
        ++round;
        std::vector<Message> batch;
        // (parent, child slot, index, value)
        std::vector<std::tuple<std::size_t, int, std::size_t, Value>> arrivals;
        for (std::size_t p = 1; p < size; ++p) {
            if (next_send[p] >= d || next_send[p] >= ready(p) || !may_send(p, round)) continue;
            std::size_t i = next_send[p]++;
            Value v = semiring.add(own(p, i), recv[p][i]);
            Message msg;
            msg.src = tree.nodes[p];
            msg.dst = tree.nodes[tree.parent_pos(p)];
            msg.value = v;
            msg.meta = {1, static_cast<std::int32_t>(i), 0, 0};
            batch.push_back(msg);
            arrivals.emplace_back(tree.parent_pos(p), (p % 2) == 1 ? 0 : 1, i, v);
            if (next_send[p] == d) ++finished;
        }
        for (auto [parent, slot, i, v] : arrivals) {
            recv[parent][i] = semiring.add(recv[parent][i], v);
            child_done[parent][slot] = i + 1;
        }
        if (batch.empty()) {
            // a parity round in which nothing was ready; charge it only
            // if work remains
            check_internal(round < 4 * static_cast<std::int64_t>(d + size) + 16,
                           "convergecast failed to drain");
            plan.program.push_back({});
            continue;
        }
        plan.program.push_back(std::move(batch));
    }
    plan.root_sums = recv[0];
    return plan;
}

std::int64_t convergecast_sum(RoundEngine& engine, std::int32_t root,
                              std::vector<std::int32_t> members,
                              const std::vector<std::vector<Value>>& member_values,
                              const Semiring& semiring, std::vector<Value>& out_sums,
                              const MessageSink& sink) {
    TreeSchedule tree = make_tree(root, members);
    // align value rows with the sorted member order of the tree
    std::vector<std::vector<Value>> aligned(tree.size() - 1);
    for (std::size_t m = 0; m < members.size(); ++m) {
        auto it = std::lower_bound(tree.nodes.begin() + 1, tree.nodes.end(), members[m]);
        aligned[it - tree.nodes.begin() - 1] = member_values[m];
    }
    ConvergecastPlan plan = convergecast_program(tree, aligned, semiring);
    std::int64_t rounds = run_program(engine, plan.program, sink);
    out_sums = std::move(plan.root_sums);
    return rounds;
}

}  // namespace lowbw

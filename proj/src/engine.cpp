#include "lowbw/engine.hpp"

#include <algorithm>

#include "lowbw/common.hpp"

namespace lowbw {

RoundEngine::RoundEngine(std::int32_t node_count, std::int64_t round_budget)
    : node_count_(node_count), budget_(round_budget) {
    check_input(node_count >= 1, "engine needs at least one node");
    // round 0 sentinel: slot r means "last used in round r", rounds are 1-based
    last_send_round_.assign(node_count_, 0);
    last_recv_round_.assign(node_count_, 0);
}

void RoundEngine::set_trace(std::ostream* out) {
    trace_ = out;
    if (trace_) *trace_ << "round,src,dst,tag\n";
}

void RoundEngine::step(std::span<const Message> sends) {
    if (round_ >= budget_) throw RoundBudgetError("round budget exhausted after " + std::to_string(round_) + " rounds");
    ++round_;
    for (const Message& m : sends) {
        auto fail = [&](const std::string& reason) {
            BandwidthViolation v{round_, m.src, reason};
            violations_.push_back(v);
            throw BandwidthError(v, "round " + std::to_string(round_) + ", node " +
                                        std::to_string(m.src) + ": " + reason);
        };
        if (m.src < 0 || m.src >= node_count_ || m.dst < 0 || m.dst >= node_count_)
            fail("endpoint out of range");
        if (m.src == m.dst) fail("self-send");
        if (last_send_round_[m.src] == round_) fail("second send in one round");
        if (last_recv_round_[m.dst] == round_) {
            BandwidthViolation v{round_, m.dst, "second receive in one round"};
            violations_.push_back(v);
            throw BandwidthError(v, "round " + std::to_string(round_) + ", node " +
                                        std::to_string(m.dst) + ": second receive in one round");
        }
        last_send_round_[m.src] = round_;
        last_recv_round_[m.dst] = round_;
        ++delivered_;
        if (trace_) *trace_ << round_ << ',' << m.src << ',' << m.dst << ',' << m.tag() << '\n';
        if (observer_) observer_(round_, m);
    }
}

Program merge_programs(std::vector<Program> parts) {
    std::size_t depth = 0;
    for (const Program& p : parts) depth = std::max(depth, p.size());
    Program merged(depth);
    for (std::size_t r = 0; r < depth; ++r) {
        std::size_t total = 0;
        for (const Program& p : parts)
            if (r < p.size()) total += p[r].size();
        merged[r].reserve(total);
        for (const Program& p : parts)
            if (r < p.size()) merged[r].insert(merged[r].end(), p[r].begin(), p[r].end());
    }
    return merged;
}

std::int64_t run_program(RoundEngine& engine, const Program& program, const MessageSink& sink) {
    for (const auto& batch : program) {
        engine.step(batch);
        if (sink)
            for (const Message& m : batch) sink(m);
    }
    return static_cast<std::int64_t>(program.size());
}

std::int64_t run_rounds(RoundEngine& engine, const StepFunction& step, std::int64_t round_budget,
                        StepMode mode) {
    const std::int32_t n = engine.node_count();
    std::vector<std::vector<Message>> inbox(n), next_inbox(n);
    std::vector<std::vector<Message>> outgoing(n);
    std::int64_t used = 0;

    for (;;) {
        if (mode == StepMode::parallel) {
#pragma omp parallel for schedule(static)
            for (std::int32_t v = 0; v < n; ++v) outgoing[v] = step(v, inbox[v]);
        } else {
            for (std::int32_t v = 0; v < n; ++v) outgoing[v] = step(v, inbox[v]);
        }

        std::vector<Message> sends;
        for (std::int32_t v = 0; v < n; ++v) {
            for (Message& m : outgoing[v]) {
                check_input(m.src == v, "step function forged src id");
                sends.push_back(m);
            }
            outgoing[v].clear();
        }
        if (sends.empty()) break;  // quiescent
        if (used >= round_budget)
            throw RoundBudgetError("run_rounds budget exhausted after " + std::to_string(used) +
                                   " rounds");

        engine.step(sends);
        ++used;
        for (auto& box : next_inbox) box.clear();
        for (const Message& m : sends) next_inbox[m.dst].push_back(m);
        std::swap(inbox, next_inbox);
    }
    return used;
}

}  // namespace lowbw

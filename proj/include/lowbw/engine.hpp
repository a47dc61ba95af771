#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "lowbw/semiring.hpp"

namespace lowbw {

/// One O(log n)-bit message: a single semiring element plus at most
/// four integer metadata words (indices and a tag).
struct Message {
    std::int32_t src = -1;
    std::int32_t dst = -1;
    Value value = 0;
    std::array<std::int32_t, 4> meta{};  // meta[0] is the tag by convention

    std::int32_t tag() const { return meta[0]; }
};

using MessageSink = std::function<void(const Message&)>;

struct BandwidthViolation {
    std::int64_t round;
    std::int32_t node;
    std::string reason;
};

class BandwidthError : public std::runtime_error {
public:
    BandwidthError(BandwidthViolation v, const std::string& what)
        : std::runtime_error(what), violation(std::move(v)) {}
    BandwidthViolation violation;
};

class RoundBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Round-synchronous network of `node_count` nodes. Per executed round
/// each node may send at most one message and receive at most one
/// message; a violation is logged and aborts the run. The engine is a
/// pure transport: node state lives with the caller.
class RoundEngine {
public:
    explicit RoundEngine(std::int32_t node_count,
                         std::int64_t round_budget = kDefaultBudget);

    std::int32_t node_count() const { return node_count_; }
    std::int64_t rounds() const { return round_; }
    std::int64_t messages_delivered() const { return delivered_; }
    std::int64_t round_budget() const { return budget_; }

    /// Execute one round with the given sends. Validates the bandwidth
    /// invariant, advances the round counter, traces and notifies the
    /// observer. Throws BandwidthError / RoundBudgetError on failure.
    void step(std::span<const Message> sends);

    /// Per-round message log: `round,src,dst,tag` CSV (header included).
    void set_trace(std::ostream* out);
    void set_observer(std::function<void(std::int64_t round, const Message&)> obs) {
        observer_ = std::move(obs);
    }

    const std::vector<BandwidthViolation>& violations() const { return violations_; }

    static constexpr std::int64_t kDefaultBudget = 1'000'000'000;

private:
    std::int32_t node_count_;
    std::int64_t budget_;
    std::int64_t round_ = 0;
    std::int64_t delivered_ = 0;
    std::vector<std::int64_t> last_send_round_, last_recv_round_;
    std::vector<BandwidthViolation> violations_;
    std::ostream* trace_ = nullptr;
    std::function<void(std::int64_t, const Message&)> observer_;
};

/// A fully scripted communication phase: one message batch per round.
using Program = std::vector<std::vector<Message>>;

/// Zip programs running on disjoint node sets into one: round r of the
/// result is the union of every program's round r. Cost is the max of
/// the parts, not the sum; the engine still enforces bandwidth, so
/// overlapping node sets are caught at execution time.
Program merge_programs(std::vector<Program> parts);

/// Execute a program; the sink sees every delivered message. Returns
/// rounds used (= program length).
std::int64_t run_program(RoundEngine& engine, const Program& program, const MessageSink& sink);

enum class StepMode { serial, parallel };

/// Per-node transition: (node, inbox from last round) -> messages to
/// send this round. Must be pure per node; with StepMode::parallel the
/// engine evaluates nodes concurrently, observably identical to
/// sequential evaluation in node-index order. Emitting more than one
/// send per node aborts with a bandwidth violation.
using StepFunction =
    std::function<std::vector<Message>(std::int32_t node, std::span<const Message> inbox)>;

/// Drive the engine until quiescence (a round in which no node emits a
/// send) or until `round_budget` rounds were used. Returns rounds used.
std::int64_t run_rounds(RoundEngine& engine, const StepFunction& step, std::int64_t round_budget,
                        StepMode mode = StepMode::serial);

}  // namespace lowbw

#pragma once

#include <vector>

#include "lowbw/engine.hpp"

namespace lowbw {

/// A unicast demand multiset with a proper edge coloring of the demand
/// multigraph: demands sharing a sender or a receiver get distinct
/// colors, so all demands of one color form a partial matching and can
/// be delivered in a single round.
struct RoutingSchedule {
    std::vector<Message> demands;
    std::vector<std::int32_t> color;  // aligned with demands
    std::int32_t color_count = 0;
    std::int64_t max_degree = 0;  // of the demand multigraph
};

/// Greedy coloring: demands sorted by (src, dst), first free color.
/// Uses at most 2 * max_degree - 1 colors.
RoutingSchedule schedule_unicast(std::vector<Message> demands);

/// Send all demands of color c on round c. Returns rounds used
/// (= color_count).
std::int64_t deliver(RoundEngine& engine, const RoutingSchedule& schedule, const MessageSink& sink);

/// The same delivery as a scripted program (round c = color-c demands),
/// for composition with merge_programs.
Program delivery_program(const RoutingSchedule& schedule);

}  // namespace lowbw

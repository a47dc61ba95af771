#include "lowbw/routing.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "lowbw/common.hpp"

namespace lowbw {

namespace {

// Used-color bitmaps per node, grown on demand.
class ColorBits {
public:
    void set(std::int32_t node, std::int32_t color) {
        auto& words = words_[node];
        std::size_t w = static_cast<std::size_t>(color) / 64;
        if (w >= words.size()) words.resize(w + 1, 0);
        words[w] |= std::uint64_t{1} << (color % 64);
    }
    const std::vector<std::uint64_t>* words(std::int32_t node) const {
        auto it = words_.find(node);
        return it == words_.end() ? nullptr : &it->second;
    }

private:
    std::unordered_map<std::int32_t, std::vector<std::uint64_t>> words_;
};

// Smallest color unused by src as a sender and by dst as a receiver.
std::int32_t first_free_color(const ColorBits& senders, std::int32_t src, const ColorBits& receivers,
                              std::int32_t dst) {
    const auto* ws = senders.words(src);
    const auto* wr = receivers.words(dst);
    for (std::size_t w = 0;; ++w) {
        std::uint64_t used = 0;
        if (ws && w < ws->size()) used |= (*ws)[w];
        if (wr && w < wr->size()) used |= (*wr)[w];
        if (used != ~std::uint64_t{0})
            return static_cast<std::int32_t>(w * 64 + std::countr_one(used));
    }
}

}  // namespace

RoutingSchedule schedule_unicast(std::vector<Message> demands) {
    RoutingSchedule s;
    std::stable_sort(demands.begin(), demands.end(), [](const Message& a, const Message& b) {
        return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });

    std::unordered_map<std::int32_t, std::int64_t> sends, recvs;
    for (const Message& m : demands) {
        check_input(m.src != m.dst, "self-demand cannot be routed");
        s.max_degree = std::max({s.max_degree, ++sends[m.src], ++recvs[m.dst]});
    }

    ColorBits used_as_sender, used_as_receiver;
    s.color.reserve(demands.size());
    for (const Message& m : demands) {
        std::int32_t c = first_free_color(used_as_sender, m.src, used_as_receiver, m.dst);
        used_as_sender.set(m.src, c);
        used_as_receiver.set(m.dst, c);
        s.color.push_back(c);
        s.color_count = std::max(s.color_count, c + 1);
    }
    s.demands = std::move(demands);
    check_internal(s.max_degree == 0 || s.color_count <= 2 * s.max_degree - 1,
                   "greedy edge coloring exceeded 2*maxdeg-1");
    return s;
}

Program delivery_program(const RoutingSchedule& schedule) {
    Program program(schedule.color_count);
    for (std::size_t pos = 0; pos < schedule.demands.size(); ++pos)
        program[schedule.color[pos]].push_back(schedule.demands[pos]);
    return program;
}

std::int64_t deliver(RoundEngine& engine, const RoutingSchedule& schedule, const MessageSink& sink) {
    return run_program(engine, delivery_program(schedule), sink);
}

}  // namespace lowbw

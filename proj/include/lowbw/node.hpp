#pragma once

#include <compare>
#include <cstdint>

namespace lowbw {

/// The three sides of the tripartite node universe V = I u J u K.
/// Side I holds rows of A and owns the output rows, J holds rows of B,
/// K indexes output columns.
enum class Side : std::uint8_t { I = 0, J = 1, K = 2 };

inline const char* side_name(Side s) {
    switch (s) {
        case Side::I: return "I";
        case Side::J: return "J";
        case Side::K: return "K";
    }
    return "?";
}

/// A logical node: (side, index), index in [0, n). The simulator hosts
/// all 3n logical nodes directly; flat ids pack them side-major.
struct NodeId {
    Side side;
    std::int32_t index;

    std::int32_t flat(std::int32_t n) const { return static_cast<std::int32_t>(side) * n + index; }
    static NodeId from_flat(std::int32_t flat, std::int32_t n) {
        return NodeId{static_cast<Side>(flat / n), flat % n};
    }

    auto operator<=>(const NodeId&) const = default;
};

}  // namespace lowbw

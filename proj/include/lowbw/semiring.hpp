#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>

namespace lowbw {

/// Element type shared by all shipped semirings: one machine word.
/// Tropical uses a distinguished sentinel for +infinity.
using Value = std::int64_t;

enum class SemiringKind { integer, boolean, tropical };

/// (add, mul, zero[, one, neg]) over machine-word values.
///
/// Shipped semirings:
///   integer  — (+, *), zero 0, one 1, with negation (a ring)
///   boolean  — (or, and), zero 0, one 1
///   tropical — (min, +), zero +inf, one 0
class Semiring {
public:
    static constexpr Value kTropicalInf = std::numeric_limits<Value>::max();

    static Semiring integers() { return Semiring(SemiringKind::integer); }
    static Semiring booleans() { return Semiring(SemiringKind::boolean); }
    static Semiring tropical() { return Semiring(SemiringKind::tropical); }
    static Semiring from_name(std::string_view name);

    SemiringKind kind() const { return kind_; }
    std::string_view name() const;

    Value zero() const { return kind_ == SemiringKind::tropical ? kTropicalInf : 0; }
    Value one() const { return kind_ == SemiringKind::boolean ? 1 : (kind_ == SemiringKind::integer ? 1 : 0); }

    Value add(Value a, Value b) const {
        switch (kind_) {
            case SemiringKind::integer: return a + b;
            case SemiringKind::boolean: return (a != 0 || b != 0) ? 1 : 0;
            case SemiringKind::tropical: return a < b ? a : b;
        }
        return 0;
    }

    Value mul(Value a, Value b) const {
        switch (kind_) {
            case SemiringKind::integer: return a * b;
            case SemiringKind::boolean: return (a != 0 && b != 0) ? 1 : 0;
            case SemiringKind::tropical:
                if (a == kTropicalInf || b == kTropicalInf) return kTropicalInf;
                return a + b;
        }
        return 0;
    }

    bool has_neg() const { return kind_ == SemiringKind::integer; }
    Value neg(Value a) const;

    /// Sample an element for law checks and instance generation. Integer
    /// values stay small so that products never overflow at desk scale.
    Value sample(std::mt19937_64& rng) const;

    std::string format(Value v) const;
    Value parse(std::string_view text) const;

private:
    explicit Semiring(SemiringKind k) : kind_(k) {}
    SemiringKind kind_;
};

}  // namespace lowbw

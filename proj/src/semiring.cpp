#include "lowbw/semiring.hpp"

#include <charconv>

#include "lowbw/common.hpp"

namespace lowbw {

Semiring Semiring::from_name(std::string_view name) {
    if (name == "integer" || name == "int") return integers();
    if (name == "boolean" || name == "bool") return booleans();
    if (name == "tropical" || name == "minplus") return tropical();
    throw std::invalid_argument("unknown semiring: " + std::string(name));
}

std::string_view Semiring::name() const {
    switch (kind_) {
        case SemiringKind::integer: return "integer";
        case SemiringKind::boolean: return "boolean";
        case SemiringKind::tropical: return "tropical";
    }
    return "?";
}

Value Semiring::neg(Value a) const {
    check_input(has_neg(), "semiring has no additive inverse");
    return -a;
}

Value Semiring::sample(std::mt19937_64& rng) const {
    switch (kind_) {
        case SemiringKind::integer: {
            std::uniform_int_distribution<Value> d(-9, 9);
            return d(rng);
        }
        case SemiringKind::boolean: {
            std::uniform_int_distribution<int> d(0, 1);
            return d(rng);
        }
        case SemiringKind::tropical: {
            // Occasional +inf so that the annihilator/identity laws get
            // exercised on the sentinel.
            std::uniform_int_distribution<int> pick(0, 9);
            if (pick(rng) == 0) return kTropicalInf;
            std::uniform_int_distribution<Value> d(0, 99);
            return d(rng);
        }
    }
    return 0;
}

std::string Semiring::format(Value v) const {
    if (kind_ == SemiringKind::tropical && v == kTropicalInf) return "inf";
    return std::to_string(v);
}

Value Semiring::parse(std::string_view text) const {
    if (text == "inf") {
        check_input(kind_ == SemiringKind::tropical, "'inf' only exists in the tropical semiring");
        return kTropicalInf;
    }
    Value v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    check_input(ec == std::errc() && ptr == text.data() + text.size(),
                "bad semiring value: " + std::string(text));
    if (kind_ == SemiringKind::boolean) v = (v != 0) ? 1 : 0;
    return v;
}

}  // namespace lowbw

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betafract/contraction.hpp"

namespace betafract {

// Built-in systems. "cantor" carries the offset 2/3 so that its invariant set
// is the Cantor set; "cantor-paper-literal" keeps the 1/3 offset, whose
// attractor lives in [0, 1/2] instead, and exists for the documented
// discrepancy checks.
inline std::vector<std::string> builtin_ifs_names() {
    return {"cantor", "cantor-paper-literal", "stretched-cantor", "small-cantor"};
}

inline std::optional<IFS> builtin_ifs(std::string_view name) {
    const Laurent third(Rational(1, 3));
    const Laurent x = Laurent::var();
    if (name == "cantor")
        return IFS({{third, Laurent(0)}, {third, Laurent(Rational(2, 3))}});
    if (name == "cantor-paper-literal")
        return IFS({{third, Laurent(0)}, {third, third}});
    if (name == "stretched-cantor")
        return IFS({{third, Laurent(0)}, {third, Laurent::monomial(Rational(2, 3), -1)}});
    if (name == "small-cantor")
        return IFS({{x, Laurent(0)}, {x, Laurent(1) - x}});
    return std::nullopt;
}

// Default seeds, each containing the attractor so iterates shrink onto it.
// The small-cantor seed must contain the fixed point 1 of its second map.
inline std::optional<Ball> builtin_seed(std::string_view name) {
    if (name == "cantor" || name == "cantor-paper-literal")
        return Ball{Laurent(Rational(1, 2)), Radius(Rational(1, 2))};
    if (name == "stretched-cantor")
        return Ball{Laurent(0), Radius(Laurent::monomial(1, -1))};
    if (name == "small-cantor") return Ball{Laurent(0), Radius(Rational(2))};
    return std::nullopt;
}

}  // namespace betafract

#pragma once

#include <functional>
#include <map>
#include <span>

#include "betafract/contraction.hpp"
#include "betafract/level.hpp"
#include "betafract/sampling.hpp"

namespace betafract {

// The standard proximity set for the field: the representative of x at the
// level of r is x truncated to exponents <= val(r). The coherence condition
// (matching representatives across levels) holds because truncation towers
// compose; it is property-tested rather than assumed.
inline Laurent proximity_point(const Laurent& x, const Radius& r) {
    return x.trunc_upto(r.valuation());
}

// Finite-resolution alpha-closeness of a ball union. For each level r, balls
// are grouped into level classes by the truncation of their centers; a class
// clusters when its total deviation from the representative (center tails
// plus radii) sits strictly below the level of r, and then a single
// s = 2 * max deviation, s <_L r, covers every class slice. A ball whose
// radius is not finer than r's level can never cluster: its slice spreads at
// the level itself.
inline bool alpha_close_check(const BallUnion& A, std::span<const Radius> levels) {
    for (const Radius& r : levels) {
        int v = r.valuation();
        std::map<Laurent, Laurent, std::less<>> deviation;  // class rep -> max deviation
        auto order_max = [](const Laurent& a, const Laurent& b) { return a < b ? b : a; };
        for (const Ball& b : A.balls()) {
            Laurent rep = b.center.trunc_upto(v);
            Laurent dev = (b.center - rep).abs() + b.radius.value();
            auto [it, fresh] = deviation.try_emplace(rep, dev);
            if (!fresh) it->second = order_max(it->second, dev);
        }
        for (const auto& [rep, dev] : deviation)
            if (*dev.valuation() <= v) return false;  // dev >= radius > 0
    }
    return true;
}

inline bool alpha_close_check(const BallUnion& A, std::initializer_list<Radius> levels) {
    return alpha_close_check(A, std::span<const Radius>(levels.begin(), levels.end()));
}

// Sampled check of the alpha-preserving conditions for an arbitrary point map
// f with radius map s:
//   level transport: y in L(x, r)  iff  f(y) in L(f(x), s(r))
//   representative transport: f(alpha_{x,r}) in L(alpha_{f(x),s(r)}, s(r))
// The generic form exists so tests can feed a deliberately broken map.
inline bool alpha_preserving_check_fn(const std::function<Laurent(const Laurent&)>& f,
                                      const std::function<Radius(const Radius&)>& s,
                                      size_t samples, uint64_t seed = 1) {
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        Laurent x = rng.laurent();
        Radius r = rng.radius();
        Radius sr = s(r);

        // in-class points must map into the image class
        Laurent w_in = rng.laurent_with_valuation_above(r.valuation());
        if (!in_level_set(f(x + w_in), f(x), sr)) return false;
        // out-of-class points must map outside it
        Laurent w_out = Laurent::monomial(rng.nonzero_rational(), r.valuation());
        if (in_level_set(f(x + w_out), f(x), sr)) return false;

        Laurent ax = proximity_point(x, r);
        Laurent afx = proximity_point(f(x), sr);
        if (!in_level_set(f(ax), afx, sr)) return false;
    }
    return true;
}

inline bool alpha_preserving_check(const ContractionMap& m, size_t samples, uint64_t seed = 1) {
    return alpha_preserving_check_fn([&](const Laurent& y) { return m(y); },
                                     [&](const Radius& r) { return m.scale(r); }, samples, seed);
}

}  // namespace betafract

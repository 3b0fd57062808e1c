#pragma once

#include <vector>

#include "betafract/ball.hpp"

namespace betafract {

// The level of a radial value is its valuation: s sits at a lower (finer)
// level than r when valuation(s) > valuation(r).
enum class LevelRel { Lower, Equal, Higher };

// Relation of s to r: Lower means s <_L r.
inline LevelRel level_cmp(const Radius& r, const Radius& s) {
    int vr = r.valuation(), vs = s.valuation();
    if (vs > vr) return LevelRel::Lower;
    if (vs < vr) return LevelRel::Higher;
    return LevelRel::Equal;
}

// L(x, r): points indistinguishable from x at every scale of r's level.
inline bool in_level_set(const Laurent& y, const Laurent& x, const Radius& r) {
    Laurent d = y - x;
    if (d.is_zero()) return true;
    return *d.valuation() > r.valuation();
}

// s is a swing value for r exactly when 2s <= r: any ball of radius s centered
// inside beta(x, s) then stays inside beta(x, r).
inline bool is_swing_value(const Radius& s, const Radius& r) {
    return s.value() + s.value() <= r.value();
}

inline bool is_level_swing_value(const Radius& s, const Radius& r) {
    return is_swing_value(s, r) && s.valuation() == r.valuation();
}

// The canonical level swing sequence r, r/2, r/4, ... (halving keeps the
// level and meets the swing condition with equality).
class SwingSequence {
public:
    explicit SwingSequence(Radius first) : cache_{std::move(first)} {}

    const Radius& at(size_t i) const {
        while (cache_.size() <= i) cache_.push_back(cache_.back().half());
        return cache_[i];
    }
    const Radius& operator[](size_t i) const { return at(i); }

    std::vector<Radius> prefix(size_t n) const {
        std::vector<Radius> out;
        out.reserve(n);
        for (size_t i = 0; i < n; ++i) out.push_back(at(i));
        return out;
    }

private:
    mutable std::vector<Radius> cache_;
};

inline SwingSequence canonical_level_swing_sequence(const Radius& r) { return SwingSequence(r); }

inline std::vector<Radius> canonical_level_swing_sequence(const Radius& r, size_t n) {
    return SwingSequence(r).prefix(n);
}

// Least k (1-based) with r / 2^(k-1) <= s. Requires s =_L r; the bound comes
// from the leading coefficients, the exact k from full comparisons.
inline size_t level_countability_index(const Radius& r, const Radius& s) {
    if (level_cmp(r, s) != LevelRel::Equal)
        throw std::invalid_argument("level_countability_index: radii not at equal level");
    SwingSequence seq(r);
    for (size_t k = 1;; ++k)
        if (seq.at(k - 1).value() <= s.value()) return k;
}

}  // namespace betafract

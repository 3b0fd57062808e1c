#pragma once

#include <span>
#include <vector>

#include "betafract/level.hpp"
#include "betafract/region.hpp"

namespace betafract {

// R_beta(A, r): the r-roll about A. In an ordered divisible group the roll of
// a ball is again a ball with the radius enlarged by r, per ball, no merging.
inline BallUnion roll(const BallUnion& A, const Radius& r) {
    std::vector<Ball> out;
    out.reserve(A.size());
    for (const Ball& b : A) out.push_back({b.center, b.radius + r});
    return BallUnion(std::move(out));
}

// R^n_beta(A, (r_i)): fold of roll over the first n radii of the sequence.
inline BallUnion iterated_roll(const BallUnion& A, std::span<const Radius> radii) {
    BallUnion cur = A;
    for (const Radius& r : radii) cur = roll(cur, r);
    return cur;
}

inline BallUnion iterated_roll(const BallUnion& A, const SwingSequence& seq, size_t n) {
    BallUnion cur = A;
    for (size_t i = 0; i < n; ++i) cur = roll(cur, seq.at(i));
    return cur;
}

// The sum r-roll of one ball, in closed form: the union over all level swing
// sequences of r and all depths of the iterated rolls. Total inflation along
// such a sequence stays strictly below 2r in its leading coefficient while
// finer terms are unconstrained, which is exactly a graded boundary at
// exponent val(r).
struct SumRollRegion {
    Ball base;
    Radius scale;

    // Membership: with d = |y - center| - radius, the point is in iff
    //   d <= 0, or val(d) > val(scale), or
    //   val(d) = val(scale) and lead(d) < 2 lead(scale).
    // Equivalently: |y - center| < radius + q * (2 scale) for some rational
    // q < 1. A leading coefficient of exactly 2 lead(scale) is out even when
    // finer terms are negative: no achievable inflation reaches it.
    bool contains(const Laurent& y) const {
        Laurent d = (y - base.center).abs() - base.radius.value();
        if (d.sign() <= 0) return true;
        int vd = *d.valuation(), vr = scale.valuation();
        if (vd > vr) return true;
        if (vd < vr) return false;
        return d.lead() < 2 * scale.lead();
    }
};

inline Region region_of(const SumRollRegion& s) {
    return region_of(s.base).sum_rolled(s.scale);
}

inline std::vector<SumRollRegion> sum_roll(const BallUnion& A, const Radius& r) {
    std::vector<SumRollRegion> out;
    out.reserve(A.size());
    for (const Ball& b : A) out.push_back({b, r});
    return out;
}

inline RegionList regions_of(std::span<const SumRollRegion> rs) {
    RegionList out;
    out.reserve(rs.size());
    for (const SumRollRegion& s : rs) out.push_back(region_of(s));
    return out;
}

inline RegionList sum_roll_regions(const BallUnion& A, const Radius& r) {
    return sum_rolled(regions_of(A), r);
}

inline bool sum_roll_member(const Laurent& y, const BallUnion& A, const Radius& r) {
    for (const Ball& b : A)
        if (SumRollRegion{b, r}.contains(y)) return true;
    return false;
}

}  // namespace betafract

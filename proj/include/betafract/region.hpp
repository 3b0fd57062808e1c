#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "betafract/ball.hpp"

namespace betafract {

// A Cut is a downward-closed subset of the field, used as one boundary of an
// order-convex region. Two kinds arise:
//
//   Point(p):      { y : y < p }            (closed: { y : y <= p })
//   Graded(v, q):  { y : trunc_{<=v}(y) < q }   with q supported on exponents
//                  <= v; closed admits equality of the truncation.
//
// A graded cut separates at a fixed exponent v and is insensitive to anything
// finer: it is the boundary shape produced by sum rolls, whose reach at level
// v approaches 2*lead(r) strictly from below while terms beyond v are
// unconstrained. Downward-closed subsets of a total order are themselves
// totally ordered by inclusion, which is what the sweep in region_subset uses.
class Cut {
public:
    static Cut point(Laurent p, bool closed) {
        Cut c;
        c.graded_ = false;
        c.pos_ = std::move(p);
        c.closed_ = closed;
        return c;
    }
    static Cut graded(int grade, const Laurent& pos, bool closed) {
        Cut c;
        c.graded_ = true;
        c.grade_ = grade;
        c.pos_ = pos.trunc_upto(grade);
        c.closed_ = closed;
        return c;
    }

    bool is_graded() const { return graded_; }
    int grade() const { return grade_; }
    const Laurent& pos() const { return pos_; }
    bool closed() const { return closed_; }

    bool contains(const Laurent& y) const {
        if (!graded_) return closed_ ? y <= pos_ : y < pos_;
        Laurent t = y.trunc_upto(grade_);
        if (t == pos_) return closed_;
        return t < pos_;
    }

    Cut translated(const Laurent& t) const {
        if (!graded_) return point(pos_ + t, closed_);
        return graded(grade_, pos_ + t, closed_);
    }

    // Upper-boundary image under a sum roll of scale r: the boundary moves up
    // by "strictly below 2*lead(r) at exponent val(r)". A coarser roll absorbs
    // any finer grading; a finer roll cannot move a coarser graded boundary.
    Cut sum_rolled_up(const Radius& r) const {
        int v = r.valuation();
        Laurent step = Laurent::monomial(2 * r.lead(), v);
        if (!graded_ || v < grade_) return graded(v, pos_.trunc_upto(v) + step, false);
        if (v == grade_) return graded(v, pos_ + step, false);
        return *this;
    }

    // Lower-boundary image under a sum roll (the mirror of sum_rolled_up):
    // the boundary moves down by the same graded amount; the point just
    // beyond the reach stays outside, hence the closed flag.
    Cut sum_rolled_down(const Radius& r) const {
        int v = r.valuation();
        Laurent step = Laurent::monomial(2 * r.lead(), v);
        if (!graded_ || v < grade_) return graded(v, pos_.trunc_upto(v) - step, true);
        if (v == grade_) return graded(v, pos_ - step, true);
        return *this;
    }

    // Set inclusion a <= b. Derivation notes: a point cut is at least as fine
    // as any grading, so against a graded cut only the position's truncation
    // matters; a graded cut carries arbitrary content beyond its grade, so
    // inclusion in anything point-like or finer needs strict position room.
    friend bool subset(const Cut& a, const Cut& b) {
        if (!a.graded_ && !b.graded_) {
            auto o = a.pos_ <=> b.pos_;
            if (o != 0) return o < 0;
            return !a.closed_ || b.closed_;
        }
        if (!a.graded_) {  // point vs graded: membership of a's position
            Laurent t = a.pos_.trunc_upto(b.grade_);
            if (t == b.pos_) return b.closed_;
            return t < b.pos_;
        }
        if (!b.graded_) {  // graded vs point
            Laurent q = b.pos_.trunc_upto(a.grade_);
            if (a.pos_ == q) return !a.closed_;
            return a.pos_ < q;
        }
        if (a.grade_ == b.grade_) {
            auto o = a.pos_ <=> b.pos_;
            if (o != 0) return o < 0;
            return !a.closed_ || b.closed_;
        }
        if (a.grade_ < b.grade_) {  // a coarser: needs room below b's truncation
            Laurent t = b.pos_.trunc_upto(a.grade_);
            if (a.pos_ == t) return !a.closed_;
            return a.pos_ < t;
        }
        // a finer: a's coarse truncation must sit inside b
        Laurent t = a.pos_.trunc_upto(b.grade_);
        if (t == b.pos_) return b.closed_;
        return t < b.pos_;
    }

    friend bool operator==(const Cut& a, const Cut& b) { return subset(a, b) && subset(b, a); }

    // Strict inclusion order; total on downward-closed sets.
    friend bool cut_less(const Cut& a, const Cut& b) { return subset(a, b) && !subset(b, a); }

private:
    bool graded_ = false;
    int grade_ = 0;
    Laurent pos_;
    bool closed_ = false;
};

// An order-convex region: upper \ lower, both downward-closed.
struct Region {
    Cut lower;
    Cut upper;

    bool contains(const Laurent& y) const { return upper.contains(y) && !lower.contains(y); }
    bool empty() const { return subset(upper, lower); }

    Region translated(const Laurent& t) const {
        return {lower.translated(t), upper.translated(t)};
    }
    Region rolled(const Radius& r) const {
        return {lower.translated(-r.value()), upper.translated(r.value())};
    }
    Region sum_rolled(const Radius& r) const {
        return {lower.sum_rolled_down(r), upper.sum_rolled_up(r)};
    }
};

inline Region region_of(const Ball& b) {
    return {Cut::point(b.center - b.radius.value(), true),
            Cut::point(b.center + b.radius.value(), false)};
}

using RegionList = std::vector<Region>;

inline RegionList regions_of(const BallUnion& A) {
    RegionList out;
    out.reserve(A.size());
    for (const Ball& b : A) out.push_back(region_of(b));
    return out;
}

inline RegionList sum_rolled(const RegionList& A, const Radius& r) {
    RegionList out;
    out.reserve(A.size());
    for (const Region& g : A) out.push_back(g.sum_rolled(r));
    return out;
}

inline std::optional<Region> intersect(const Region& a, const Region& b) {
    Region out{subset(a.lower, b.lower) ? b.lower : a.lower,
               subset(a.upper, b.upper) ? a.upper : b.upper};
    if (out.empty()) return std::nullopt;
    return out;
}

// Exact inclusion of one finite union of regions in another. All regions are
// order intervals, so this is an endpoint sweep: sort the outer intervals,
// merge whenever the next lower cut does not exceed the running upper cut
// (set difference of cuts empty means no gap), then each nonempty inner
// interval must land inside a single merged block.
inline bool region_subset(const RegionList& inner, const RegionList& outer) {
    std::vector<Region> blocks;
    blocks.reserve(outer.size());
    for (const Region& g : outer)
        if (!g.empty()) blocks.push_back(g);
    if (blocks.empty()) {
        for (const Region& g : inner)
            if (!g.empty()) return false;
        return true;
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Region& a, const Region& b) { return cut_less(a.lower, b.lower); });
    std::vector<Region> merged;
    merged.push_back(blocks.front());
    for (size_t i = 1; i < blocks.size(); ++i) {
        Region& cur = merged.back();
        if (subset(blocks[i].lower, cur.upper)) {
            if (subset(cur.upper, blocks[i].upper)) cur.upper = blocks[i].upper;
        } else {
            merged.push_back(blocks[i]);
        }
    }
    for (const Region& g : inner) {
        if (g.empty()) continue;
        // last block whose lower cut is <= g.lower
        size_t lo = 0, hi = merged.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (subset(merged[mid].lower, g.lower))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo == 0) return false;
        const Region& host = merged[lo - 1];
        if (!subset(g.upper, host.upper)) return false;
    }
    return true;
}

inline bool region_subset(const BallUnion& inner, const RegionList& outer) {
    return region_subset(regions_of(inner), outer);
}
inline bool region_subset(const RegionList& inner, const BallUnion& outer) {
    return region_subset(inner, regions_of(outer));
}
inline bool region_subset(const BallUnion& inner, const BallUnion& outer) {
    return region_subset(regions_of(inner), regions_of(outer));
}

inline bool region_equal(const RegionList& a, const RegionList& b) {
    return region_subset(a, b) && region_subset(b, a);
}

}  // namespace betafract

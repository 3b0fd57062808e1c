#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "betafract/ball.hpp"

namespace betafract {

// Affine strict contraction y -> a*y + b. Its radius function s(r) = |a|*r is
// strictly monotone and level-surjective (valuation shifts by val(a)). The
// contraction degree is the least N with 2|a|^N <= 1, i.e. the first iterate
// whose scale is a swing value of the input radius; construction rejects
// slopes that admit none (|a| = 1, or |a| > 1).
class ContractionMap {
public:
    ContractionMap(Laurent slope, Laurent offset)
        : slope_(std::move(slope)), offset_(std::move(offset)) {
        if (slope_.is_zero()) throw std::invalid_argument("ContractionMap: zero slope");
        Laurent a = slope_.abs();
        // 2|a|^N <= 1 is reachable iff |a| shrinks at leading order: either
        // val(a) > 0, or val(a) = 0 with leading coefficient < 1. A slope like
        // 1 - x satisfies |a| < 1 yet 2|a|^N keeps leading coefficient 2.
        int va = *a.valuation();
        if (va < 0 || (va == 0 && a.lead() >= 1))
            throw std::invalid_argument("ContractionMap: slope admits no contraction degree");
        Laurent p = a;
        unsigned n = 1;
        while (!(p + p <= Laurent(1))) {
            p *= a;
            ++n;
        }
        degree_ = n;
    }

    const Laurent& slope() const { return slope_; }
    const Laurent& offset() const { return offset_; }
    unsigned degree() const { return degree_; }

    Laurent operator()(const Laurent& y) const { return slope_ * y + offset_; }

    Radius scale(const Radius& r) const { return Radius(slope_.abs() * r.value()); }

    Ball operator()(const Ball& b) const { return {(*this)(b.center), scale(b.radius)}; }

private:
    Laurent slope_;
    Laurent offset_;
    unsigned degree_ = 0;
};

inline Radius strict_scale(const ContractionMap& m, const Radius& r) { return m.scale(r); }
inline unsigned contraction_degree(const ContractionMap& m) { return m.degree(); }

// A finite family of contractions acting on ball unions by union of images.
class IFS {
public:
    explicit IFS(std::vector<ContractionMap> maps) : maps_(std::move(maps)) {
        if (maps_.empty()) throw std::invalid_argument("IFS: no maps");
        for (const ContractionMap& m : maps_) degree_ = std::max(degree_, m.degree());
    }

    const std::vector<ContractionMap>& maps() const { return maps_; }
    unsigned degree() const { return degree_; }

    BallUnion operator()(const BallUnion& A) const {
        std::vector<Ball> out;
        out.reserve(A.size() * maps_.size());
        for (const ContractionMap& m : maps_)
            for (const Ball& b : A) out.push_back(m(b));
        return BallUnion(std::move(out));
    }

private:
    std::vector<ContractionMap> maps_;
    unsigned degree_ = 0;
};

inline BallUnion apply_ifs(const IFS& F, const BallUnion& A) { return F(A); }

}  // namespace betafract

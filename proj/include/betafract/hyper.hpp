#pragma once

#include "betafract/roll.hpp"

namespace betafract {

// The hyperspace proximity relation beta_H: B is r-near A when each set lies
// inside the sum r-roll of the other.
inline bool hyper_in(const RegionList& B, const RegionList& A, const Radius& r) {
    return region_subset(B, sum_rolled(A, r)) && region_subset(A, sum_rolled(B, r));
}

inline bool hyper_in(const BallUnion& B, const BallUnion& A, const Radius& r) {
    return hyper_in(regions_of(B), regions_of(A), r);
}

}  // namespace betafract

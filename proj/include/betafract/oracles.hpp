#pragma once

#include <set>

#include "betafract/laurent.hpp"

namespace betafract {

// Exact Cantor set membership for rationals, by walking the base-3 expansion
// with long division and cycle detection. Digit choices: after v <- 3v, a
// value in [0,1] stands for digit 0, a value in [2,3] for digit 2 (subtract
// it), anything strictly between forces digit 1 and rejects. Boundary values
// explore the expansion that avoids 1, so ternary-terminating rationals such
// as 1/3 = 0.0222... are accepted.
inline bool cantor_member(const Rational& q) {
    if (q < 0 || q > 1) return false;
    std::set<Rational> seen;
    Rational v = q;
    while (true) {
        if (v == 0) return true;
        if (!seen.insert(v).second) return true;  // cycle of 0/2 digits
        v *= 3;
        if (v > 1 && v < 2) return false;
        if (v >= 2) v -= 2;
    }
}

// C_stretched = { c / x : c in the Cantor set }: zero, or a single pole term
// whose coefficient is a Cantor member.
inline bool stretched_member(const Laurent& p) {
    if (p.is_zero()) return true;
    if (p.term_count() != 1 || *p.valuation() != -1) return false;
    return cantor_member(p.lead());
}

// C_small: finite alternating sums +x^{f(0)} - x^{f(1)} + ... with f strictly
// increasing and f(0) >= 0; the empty sum is allowed.
inline bool small_cantor_member(const Laurent& p) {
    if (p.is_zero()) return true;
    if (*p.valuation() < 0) return false;
    Rational expect(1);
    for (const auto& [e, c] : p.terms()) {
        if (c != expect) return false;
        expect = -expect;
    }
    return true;
}

}  // namespace betafract

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "betafract/ball.hpp"

namespace betafract {

// Deterministic sampler for property suites. Raw engine output is reduced by
// modulo so the streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t u64() { return eng_(); }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool chance(unsigned percent) { return u64() % 100 < percent; }

    Rational rational(long long max_num = 100, long long max_den = 100) {
        return Rational(range(-max_num, max_num), range(1, max_den));
    }

    Rational nonzero_rational(long long max_num = 100, long long max_den = 100) {
        for (;;) {
            Rational q = rational(max_num, max_den);
            if (q != 0) return q;
        }
    }

    Rational positive_rational(long long max_num = 100, long long max_den = 100) {
        return Rational(range(1, max_num), range(1, max_den));
    }

    Laurent laurent(int min_exp = -6, int max_exp = 6, int max_terms = 4) {
        Laurent out;
        int k = static_cast<int>(range(0, max_terms));
        for (int i = 0; i < k; ++i)
            out += Laurent::monomial(rational(), static_cast<int>(range(min_exp, max_exp)));
        return out;
    }

    Laurent nonzero_laurent(int min_exp = -6, int max_exp = 6, int max_terms = 4) {
        for (;;) {
            Laurent p = laurent(min_exp, max_exp, max_terms);
            if (!p.is_zero()) return p;
        }
    }

    Laurent laurent_with_valuation_above(int v, int spread = 4) {
        Laurent out = Laurent::monomial(nonzero_rational(), static_cast<int>(range(v + 1, v + spread)));
        if (chance(50)) out += Laurent::monomial(rational(), static_cast<int>(range(v + 1, v + spread)));
        return out.is_zero() ? Laurent::monomial(1, v + 1) : out;
    }

    // Positive value: positive leading coefficient, optionally finer noise of
    // either sign (the leading term keeps the sign).
    Radius radius(int min_exp = -4, int max_exp = 4) {
        int v = static_cast<int>(range(min_exp, max_exp));
        Laurent out = Laurent::monomial(positive_rational(), v);
        if (chance(40)) out += Laurent::monomial(rational(), static_cast<int>(range(v + 1, v + 3)));
        return Radius(out);
    }

    Radius radius_at_level(int v) {
        Laurent out = Laurent::monomial(positive_rational(), v);
        if (chance(40)) out += Laurent::monomial(rational(), static_cast<int>(range(v + 1, v + 3)));
        return Radius(out);
    }

    Ball ball(int min_exp = -4, int max_exp = 4) {
        return {laurent(min_exp, max_exp, 3), radius(min_exp, max_exp)};
    }

    BallUnion ball_union(size_t max_balls = 4, int min_exp = -4, int max_exp = 4) {
        std::vector<Ball> balls;
        size_t n = static_cast<size_t>(range(1, static_cast<long long>(max_balls)));
        for (size_t i = 0; i < n; ++i) balls.push_back(ball(min_exp, max_exp));
        return BallUnion(std::move(balls));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace betafract

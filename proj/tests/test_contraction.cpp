#include <catch2/catch_amalgamated.hpp>

#include "betafract/builtins.hpp"
#include "betafract/parse.hpp"
#include "betafract/proximity.hpp"
#include "betafract/region.hpp"
#include "betafract/roll.hpp"

using namespace betafract;

namespace {
const Laurent x = Laurent::var();
}

TEST_CASE("strict_scale") {
    ContractionMap cantor1(Laurent(Rational(1, 3)), Laurent(0));
    CHECK(strict_scale(cantor1, Radius(Rational(1))).value() == Laurent(Rational(1, 3)));

    ContractionMap small1(x, Laurent(0));
    CHECK(strict_scale(small1, Radius(Rational(1))).value() == x);
}

TEST_CASE("slopes without a contraction certificate are rejected") {
    CHECK_THROWS_AS(ContractionMap(Laurent(1), Laurent(0)), std::invalid_argument);
    CHECK_THROWS_AS(ContractionMap(Laurent(-1), Laurent(0)), std::invalid_argument);
    CHECK_THROWS_AS(ContractionMap(Laurent(0), Laurent(0)), std::invalid_argument);
    CHECK_THROWS_AS(ContractionMap(Laurent(2), Laurent(0)), std::invalid_argument);
    CHECK_THROWS_AS(ContractionMap(Laurent::monomial(1, -1), Laurent(0)), std::invalid_argument);
    // |1 - x| < 1 but the leading coefficient never shrinks
    CHECK_THROWS_AS(ContractionMap(Laurent(1) - x, Laurent(0)), std::invalid_argument);
}

TEST_CASE("contraction degree") {
    CHECK(ContractionMap(Laurent(Rational(1, 3)), Laurent(0)).degree() == 1);
    CHECK(ContractionMap(Laurent(Rational(2, 3)), Laurent(0)).degree() == 2);
    CHECK(ContractionMap(x, Laurent(0)).degree() == 1);
    CHECK(ContractionMap(Laurent(Rational(1, 2)), Laurent(0)).degree() == 1);  // 2*(1/2) <= 1
    CHECK(ContractionMap(Laurent(Rational(-2, 3)), Laurent(0)).degree() == 2);
}

TEST_CASE("apply_ifs on the built-in systems") {
    BallUnion seed(Ball{Laurent(Rational(1, 2)), Radius(Rational(1, 2))});

    BallUnion corrected = apply_ifs(*builtin_ifs("cantor"), seed);
    REQUIRE(corrected.size() == 2);
    CHECK(corrected.balls()[0].center == Laurent(Rational(1, 6)));
    CHECK(corrected.balls()[0].radius.value() == Laurent(Rational(1, 6)));
    CHECK(corrected.balls()[1].center == Laurent(Rational(5, 6)));
    CHECK(corrected.balls()[1].radius.value() == Laurent(Rational(1, 6)));

    BallUnion literal = apply_ifs(*builtin_ifs("cantor-paper-literal"), seed);
    CHECK(literal.balls()[1].center == Laurent(Rational(1, 2)));
    CHECK(literal.balls()[1].radius.value() == Laurent(Rational(1, 6)));

    BallUnion small = apply_ifs(*builtin_ifs("small-cantor"),
                                BallUnion(Ball{Laurent(0), Radius(Rational(2))}));
    REQUIRE(small.size() == 2);
    CHECK(small.balls()[0].center == Laurent(0));
    CHECK(small.balls()[0].radius.value() == parse_laurent("2x"));
    CHECK(small.balls()[1].center == parse_laurent("1 - x"));
    CHECK(small.balls()[1].radius.value() == parse_laurent("2x"));
}

TEST_CASE("IFS degree is the max over maps") {
    IFS mixed({ContractionMap(Laurent(Rational(1, 3)), Laurent(0)),
               ContractionMap(Laurent(Rational(2, 3)), Laurent(1))});
    CHECK(mixed.degree() == 2);
    CHECK(builtin_ifs("cantor")->degree() == 1);
    CHECK(builtin_ifs("small-cantor")->degree() == 1);
}

TEST_CASE("image of a rolled set sits inside the rolled image") {
    BallUnion A({Ball{Laurent(1), Radius(Rational(1, 2))},
                 Ball{parse_laurent("x^-1"), Radius(x)}});
    Radius r(Rational(2));
    for (const char* name : {"cantor", "small-cantor", "stretched-cantor"}) {
        IFS F = *builtin_ifs(name);
        CHECK(region_subset(regions_of(F(roll(A, r))), regions_of(roll(F(A), r))));
    }
}

TEST_CASE("proximity point is truncation at the level") {
    Radius rx(x);  // valuation 1
    CHECK(proximity_point(parse_laurent("1 + x + x^3"), rx) == parse_laurent("1 + x"));
    Laurent p = parse_laurent("2 - x");
    CHECK(proximity_point(p, rx) == p);
    CHECK(proximity_point(Laurent::monomial(1, 2), Radius(Rational(1))) == Laurent(0));
}

TEST_CASE("alpha-preserving holds for affine contractions") {
    CHECK(alpha_preserving_check(ContractionMap(Laurent(Rational(1, 3)), Laurent(Rational(2, 3))),
                                 200));
    CHECK(alpha_preserving_check(ContractionMap(x, Laurent(1) - x), 200));
}

TEST_CASE("a non-affine map fails alpha preservation") {
    // squaring doubles valuations, breaking the level transport of s(r) = r/3
    auto f = [](const Laurent& y) { return y * y; };
    auto s = [](const Radius& r) { return Radius(r.value() * Laurent(Rational(1, 3))); };
    CHECK_FALSE(alpha_preserving_check_fn(f, s, 200));
}

TEST_CASE("alpha closeness of the built-in iterates at resolved levels") {
    // small-cantor radii shrink by a level per step, so the iterate clusters
    // at level x^k once n > k
    IFS small = *builtin_ifs("small-cantor");
    BallUnion cur(*builtin_seed("small-cantor"));
    std::vector<Radius> ladder{Radius(Rational(1)), Radius(x), Radius(x * x),
                               Radius(x * x * x)};
    for (size_t n = 1; n <= 8; ++n) {
        cur = small(cur);
        std::vector<Radius> resolved;
        for (const Radius& r : ladder)
            if (r.valuation() < static_cast<int>(n)) resolved.push_back(r);
        CHECK(alpha_close_check(cur, resolved));
    }
    // at the level of its own radii the iterate cannot cluster
    CHECK_FALSE(alpha_close_check(cur, {Radius(Laurent::monomial(1, 8))}));

    // cantor and stretched radii stay at one level forever; they cluster only
    // at strictly coarser levels
    IFS cantor = *builtin_ifs("cantor");
    BallUnion c(*builtin_seed("cantor"));
    for (int i = 0; i < 5; ++i) c = cantor(c);
    CHECK(alpha_close_check(c, {Radius(Laurent::monomial(1, -1))}));
    CHECK_FALSE(alpha_close_check(c, {Radius(Rational(1))}));

    IFS stretched = *builtin_ifs("stretched-cantor");
    BallUnion s(*builtin_seed("stretched-cantor"));
    for (int i = 0; i < 5; ++i) s = stretched(s);
    CHECK(alpha_close_check(s, {Radius(Laurent::monomial(1, -2))}));
    CHECK_FALSE(alpha_close_check(s, {Radius(Laurent::monomial(1, -1))}));
}

TEST_CASE("alpha closeness of ball unions") {
    // a fine-radius singleton clusters at the level just above its scale
    BallUnion tight(Ball{parse_laurent("1 + x^3"), Radius(Laurent::monomial(1, 5))});
    CHECK(alpha_close_check(tight, {Radius(Laurent::monomial(1, 2))}));

    // a ball as wide as the level cannot cluster
    BallUnion wide(Ball{Laurent(1), Radius(Rational(1))});
    CHECK_FALSE(alpha_close_check(wide, {Radius(Rational(1))}));

    // two balls in one class, one of them too wide for the level
    BallUnion pair({Ball{Laurent(1) + Laurent::monomial(1, 3), Radius(Laurent::monomial(1, 4))},
                    Ball{Laurent(1), Radius(Laurent::monomial(1, 1))}});
    CHECK_FALSE(alpha_close_check(pair, {Radius(x)}));
    CHECK(alpha_close_check(pair, {Radius(Rational(1))}));
}

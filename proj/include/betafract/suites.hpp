#pragma once

#include <string>
#include <vector>

#include "betafract/builtins.hpp"
#include "betafract/hyper.hpp"
#include "betafract/parse.hpp"
#include "betafract/proximity.hpp"
#include "betafract/sampling.hpp"

namespace betafract {

struct SuiteResult {
    std::string name;
    size_t samples = 0;
    size_t failures = 0;
    std::vector<std::string> notes;  // first few counterexamples

    SuiteResult() = default;
    SuiteResult(std::string n, size_t s) : name(std::move(n)), samples(s) {}
    bool passed() const { return failures == 0; }
};

namespace detail {

inline void record_failure(SuiteResult& res, const std::string& note) {
    ++res.failures;
    if (res.notes.size() < 5) res.notes.push_back(note);
}

inline RegionList point_region(const Laurent& x) {
    return {Region{Cut::point(x, false), Cut::point(x, true)}};
}

// Translate every ball by noise strictly finer than the given level.
inline BallUnion perturb_finer_than(Rng& rng, const BallUnion& A, int level) {
    std::vector<Ball> out;
    for (const Ball& b : A.balls())
        out.push_back({b.center + rng.laurent_with_valuation_above(level), b.radius});
    return BallUnion(std::move(out));
}

inline Laurent order_max(const Laurent& a, const Laurent& b) { return a < b ? b : a; }

}  // namespace detail

// ---------------------------------------------------------------------------
// laurent-field: ordered-ring laws, valuation arithmetic, order/cmp agreement
// ---------------------------------------------------------------------------
inline SuiteResult suite_laurent_field(size_t samples, uint64_t seed) {
    SuiteResult res{"laurent-field", samples};
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        Laurent a = rng.laurent(), b = rng.laurent(), c = rng.laurent();
        if ((a + b) + c != a + (b + c)) detail::record_failure(res, "+ assoc: " + to_string(a));
        if ((a * b) * c != a * (b * c)) detail::record_failure(res, "* assoc: " + to_string(a));
        if (a + b != b + a || a * b != b * a) detail::record_failure(res, "comm: " + to_string(a));
        if (a * (b + c) != a * b + a * c) detail::record_failure(res, "distrib: " + to_string(a));
        if (a < b && !(a + c < b + c)) detail::record_failure(res, "order(+): " + to_string(c));
        if (a < b && c.sign() > 0 && !(a * c < b * c))
            detail::record_failure(res, "order(*): " + to_string(c));
        if (!a.is_zero() && !b.is_zero()) {
            if (*(a * b).valuation() != *a.valuation() + *b.valuation())
                detail::record_failure(res, "val(ab): " + to_string(a) + " ; " + to_string(b));
            if ((a * b).lead() != a.lead() * b.lead())
                detail::record_failure(res, "lead(ab): " + to_string(a));
        }
        Laurent d = b - a;
        bool lt = cmp(a, b) == Cmp::LT;
        bool rule = !d.is_zero() && d.lead() > 0;
        if (lt != rule) detail::record_failure(res, "cmp rule: " + to_string(a));
        if (a.abs() * b.abs() != (a * b).abs()) detail::record_failure(res, "abs mult");
        Laurent combo = a * b - c;
        for (const auto& kv : combo.terms())
            if (kv.second == 0) detail::record_failure(res, "zero term stored");
    }
    return res;
}

// ---------------------------------------------------------------------------
// beta-axioms: the four ball-space conditions plus the swing characterization
// ---------------------------------------------------------------------------
inline SuiteResult suite_beta_axioms(size_t samples, uint64_t seed) {
    SuiteResult res{"beta-axioms", samples};
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        Laurent x = rng.laurent();
        Radius r = rng.radius();
        Ball bx{x, r};

        // (1) center membership
        if (!in_ball(x, bx)) detail::record_failure(res, "axiom1: " + to_string(x));

        // (2) openness: any interior point carries the residual ball inside
        Rational q(rng.range(-9, 9), 10);
        Laurent y = x + r.value() * Laurent(q);
        Laurent gap = r.value() - (y - x).abs();
        if (gap.sign() <= 0) {
            detail::record_failure(res, "axiom2 setup");
        } else if (!region_subset(BallUnion(Ball{y, Radius(gap)}), BallUnion(bx))) {
            detail::record_failure(res, "axiom2: " + to_string(y));
        }

        // (3) refinement at a common point of two overlapping balls
        Radius s = rng.radius();
        Laurent z = x + r.value() * Laurent(Rational(1, 4));
        Laurent y2 = z - s.value() * Laurent(Rational(1, 3));
        Laurent g1 = r.value() - (z - x).abs();
        Laurent g2 = s.value() - (z - y2).abs();
        Laurent t = g1 < g2 ? g1 : g2;
        if (t.sign() <= 0 || !region_subset(BallUnion(Ball{z, Radius(t)}), BallUnion(bx)) ||
            !region_subset(BallUnion(Ball{z, Radius(t)}), BallUnion(Ball{y2, s})))
            detail::record_failure(res, "axiom3: " + to_string(z));

        // (4) swing existence at the same level
        if (!is_level_swing_value(r.half(), r)) detail::record_failure(res, "axiom4");

        // swing characterization: 2s <= r iff every ball of radius s centered
        // inside beta(x, s) stays inside beta(x, r); x + r/2 witnesses failure.
        Radius s2 = rng.radius();
        if (is_swing_value(s2, r)) {
            Laurent inner = x + s2.value() * Laurent(Rational(9, 10));
            if (!region_subset(BallUnion(Ball{inner, s2}), BallUnion(bx)))
                detail::record_failure(res, "swing char (pos): " + to_string(s2.value()));
        } else {
            Laurent witness = x + r.value() * Laurent(Rational(1, 2));
            if (in_ball(witness, Ball{x, s2}) &&
                region_subset(BallUnion(Ball{witness, s2}), BallUnion(bx)))
                detail::record_failure(res, "swing char (neg): " + to_string(s2.value()));
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// level-structure: unboundedness, countability, swing completeness
// ---------------------------------------------------------------------------
inline SuiteResult suite_level_structure(size_t samples, uint64_t seed) {
    SuiteResult res{"level-structure", samples};
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        Radius r = rng.radius();
        Radius finer = Radius(Laurent::var() * r.value());
        if (level_cmp(r, finer) != LevelRel::Lower)
            detail::record_failure(res, "level-unbounded: " + to_string(r.value()));

        if (!is_level_swing_value(r.half(), r)) detail::record_failure(res, "swing-complete");

        Radius s = rng.radius_at_level(r.valuation());
        size_t k = level_countability_index(r, s);
        SwingSequence seq(r);
        bool ok = seq.at(k - 1).value() <= s.value() &&
                  (k == 1 || !(seq.at(k - 2).value() <= s.value()));
        if (!ok) detail::record_failure(res, "level-countable: " + to_string(s.value()));

        auto pre = canonical_level_swing_sequence(r, 6);
        for (size_t j = 0; j + 1 < pre.size(); ++j) {
            if (!is_level_swing_value(pre[j + 1], pre[j]))
                detail::record_failure(res, "canonical seq swing");
            if (pre[j].valuation() != r.valuation())
                detail::record_failure(res, "canonical seq level");
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// roll-symmetry: R(R(A,r),s) = R(R(A,s),r) as regions, exactly
// ---------------------------------------------------------------------------
inline SuiteResult suite_roll_symmetry(size_t samples, uint64_t seed) {
    SuiteResult res{"roll-symmetry", samples};
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        BallUnion A = rng.ball_union();
        Radius r = rng.radius(), s = rng.radius();
        BallUnion lhs = roll(roll(A, r), s), rhs = roll(roll(A, s), r);
        if (!region_equal(regions_of(lhs), regions_of(rhs)))
            detail::record_failure(res, "roll-symmetry: r=" + to_string(r.value()));
    }
    return res;
}

// ---------------------------------------------------------------------------
// sum-roll-oracle: the closed form against brute-force iterated rolls
// ---------------------------------------------------------------------------
// Enumerates level swing sequences r, q2*r, q2*q3*r, ... with each ratio in
// {1/2, 1/3} (any ratio <= 1/2 keeps the swing condition and the level),
// rolls them out with the plain roll operation, and tests coverage by open
// ball membership alone; the closed form never enters this path.
inline bool sum_roll_oracle_covers(const Laurent& y, const BallUnion& A, const Radius& r,
                                   size_t depth) {
    std::vector<std::vector<Radius>> frontier{{r}};
    for (size_t d = 0; d < depth; ++d) {
        std::vector<std::vector<Radius>> grown;
        for (const auto& s : frontier) {
            BallUnion rolled = iterated_roll(A, std::span<const Radius>(s));
            if (rolled.contains_point(y)) return true;
            if (d + 1 < depth)
                for (int ratio : {2, 3}) {
                    auto ext = s;
                    ext.push_back(Radius(s.back().value().div_monomial(Rational(ratio), 0)));
                    grown.push_back(std::move(ext));
                }
        }
        frontier = std::move(grown);
    }
    return false;
}

inline SuiteResult suite_sum_roll_oracle(size_t samples, uint64_t seed, size_t depth = 6) {
    SuiteResult res{"sum-roll-oracle", samples};
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        BallUnion A = rng.ball_union(3);
        Radius r = rng.radius(-4, 4);
        Laurent y;
        const Ball& b = A.balls()[static_cast<size_t>(rng.u64() % A.size())];
        switch (rng.range(0, 3)) {
            case 0:
                y = rng.laurent(-4, 4);
                break;
            case 1:  // excess spanning [0, 2.5] * r, straddling the 2r reach
                y = b.center + b.radius.value() + r.value() * Laurent(Rational(rng.range(0, 40), 16));
                break;
            case 2:  // inside the ball
                y = b.center + b.radius.value() * Laurent(Rational(1, 3));
                break;
            default:  // fine offset beyond the scale level
                y = b.center + b.radius.value() + rng.laurent_with_valuation_above(r.valuation());
                break;
        }
        bool member = sum_roll_member(y, A, r);
        bool covered = sum_roll_oracle_covers(y, A, r, depth);
        if (covered && !member)
            detail::record_failure(res, "oracle covers, closed form rejects: y=" + to_string(y));
        // the cut-algebra route must agree with the closed form
        bool via_regions = false;
        for (const Region& g : sum_roll_regions(A, r))
            if (g.contains(y)) via_regions = true;
        if (via_regions != member)
            detail::record_failure(res, "region/member mismatch: y=" + to_string(y));
    }
    return res;
}

// ---------------------------------------------------------------------------
// region-lemmas: the exact inclusion lemmas, via region arithmetic
// ---------------------------------------------------------------------------
inline SuiteResult suite_region_lemmas(size_t samples, uint64_t seed) {
    SuiteResult res{"region-lemmas", samples};
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        BallUnion A = rng.ball_union();
        Radius r = rng.radius(), s = rng.radius();

        // sum-roll symmetry: nested regions compared exactly and on probes
        RegionList rs = sum_rolled(sum_rolled(regions_of(A), r), s);
        RegionList sr = sum_rolled(sum_rolled(regions_of(A), s), r);
        if (!region_equal(rs, sr)) detail::record_failure(res, "sumroll-symmetric");
        for (int probe = 0; probe < 5; ++probe) {
            Laurent y = rng.laurent();
            bool in_rs = false, in_sr = false;
            for (const Region& g : rs) in_rs = in_rs || g.contains(y);
            for (const Region& g : sr) in_sr = in_sr || g.contains(y);
            if (in_rs != in_sr) detail::record_failure(res, "sumroll-symmetric probe");
        }

        // monotone in the radius
        const Radius& lo = s.value() <= r.value() ? s : r;
        const Radius& hi = s.value() <= r.value() ? r : s;
        if (!region_subset(sum_rolled(regions_of(A), lo), sum_rolled(regions_of(A), hi)))
            detail::record_failure(res, "hyperspace-ordered");

        // double sum roll at a swing value stays inside the single roll above
        Radius sw = Radius(r.value().div_monomial(Rational(rng.range(2, 5)), 0));
        if (rng.chance(30)) sw = Radius(sw.value() * Laurent::var());  // finer-level swing value
        if (is_swing_value(sw, r)) {
            RegionList twice = sum_rolled(sum_rolled(regions_of(A), sw), sw);
            if (!region_subset(twice, sum_rolled(regions_of(A), r)))
                detail::record_failure(res, "redribbon");
        }

        // level swing chain r1, r2, r3: the sum r3-roll fits in the plain r1-roll
        Radius r1 = rng.radius();
        Radius r2 = Radius(r1.value().div_monomial(Rational(rng.range(2, 4)), 0));
        Radius r3 = Radius(r2.value().div_monomial(Rational(rng.range(2, 4)), 0));
        if (!region_subset(sum_rolled(regions_of(A), r3), regions_of(roll(A, r1))))
            detail::record_failure(res, "geometric-level-sum");

        // closure containment along a swing chain
        Laurent xc = rng.laurent();
        Radius t1 = rng.radius();
        Radius t3 = Radius(t1.value() * Laurent(Rational(1, 4)));
        Region closed3{Cut::point(xc - t3.value(), false), Cut::point(xc + t3.value(), true)};
        if (!region_subset(RegionList{closed3}, regions_of(BallUnion(Ball{xc, t1}))))
            detail::record_failure(res, "closure-containment");

        // structured: max pairwise distance plus radii bounds B inside a roll of A
        BallUnion B = rng.ball_union();
        Laurent dist(0), maxrad(0);
        for (const Ball& ba : A.balls())
            for (const Ball& bb : B.balls())
                dist = detail::order_max(dist, (bb.center - ba.center).abs());
        for (const Ball& bb : B.balls()) maxrad = detail::order_max(maxrad, bb.radius.value());
        Radius t(dist + maxrad + Laurent(1));
        if (!region_subset(B, regions_of(roll(A, t)))) detail::record_failure(res, "structured");

        // r-openness of the sum roll: a member carries a same-level ball inside
        RegionList sum = sum_rolled(regions_of(A), r);
        const Ball& b0 = A.balls().front();
        Laurent member = b0.center + b0.radius.value() + r.value() * Laurent(Rational(1, 2));
        bool found = false;
        Radius cand = r;
        for (int k = 0; k < 64 && !found; ++k) {
            if (region_subset(regions_of(BallUnion(Ball{member, cand})), sum)) found = true;
            cand = cand.half();
        }
        if (!found) detail::record_failure(res, "r-open witness");
    }
    return res;
}

// ---------------------------------------------------------------------------
// hyper-axioms: the proximity relation on the hyperspace
// ---------------------------------------------------------------------------
inline SuiteResult suite_hyper_axioms(size_t samples, uint64_t seed) {
    SuiteResult res{"hyper-axioms", samples};
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        BallUnion A = rng.ball_union();
        Radius r = rng.radius();

        if (!hyper_in(A, A, r)) detail::record_failure(res, "hyper reflexivity");

        // hyper order: near at s <= r implies near at r
        Radius s_small = r.half();
        BallUnion B = detail::perturb_finer_than(rng, A, s_small.valuation());
        if (hyper_in(B, A, s_small) && !hyper_in(B, A, r))
            detail::record_failure(res, "hyper order");

        // rollthemole: B near A at r, C near B at t <_L r => C near A at r
        BallUnion Bf = detail::perturb_finer_than(rng, A, r.valuation());
        Radius t = rng.radius_at_level(r.valuation() + static_cast<int>(rng.range(1, 3)));
        BallUnion C = detail::perturb_finer_than(rng, Bf, t.valuation());
        if (!hyper_in(Bf, A, r) || !hyper_in(C, Bf, t)) {
            detail::record_failure(res, "rollthemole premise construction");
        } else if (!hyper_in(C, A, r)) {
            detail::record_failure(res, "rollthemole");
        }

        // swing transfer: B, C near A at s with 2s <= r => C near B at r
        Radius sw = r.half();
        BallUnion B2 = detail::perturb_finer_than(rng, A, sw.valuation());
        BallUnion C2 = detail::perturb_finer_than(rng, A, sw.valuation());
        if (hyper_in(B2, A, sw) && hyper_in(C2, A, sw) && !hyper_in(C2, B2, r))
            detail::record_failure(res, "hyper swing transfer");

        // Hausdorff separation with an exact emptiness certificate: a witness
        // ball at w misses A, and no set can be r5-near both A and the far set
        Laurent far(0);
        for (const Ball& b : A.balls()) far = detail::order_max(far, b.center + b.radius.value());
        Radius rw = rng.radius();
        Laurent w = far + rw.value() + rw.value();
        BallUnion Bsep(Ball{w, Radius(rw.value() * Laurent(Rational(1, 2)))});
        Radius r5 = Radius(rw.value() * Laurent(Rational(1, 16)));
        RegionList reach = sum_rolled(sum_rolled(regions_of(A), r5), r5);
        if (region_subset(regions_of(Bsep), reach))
            detail::record_failure(res, "hausdorff separation certificate");

        // point-level relations through singleton hypersets at finite depth
        Laurent xx = rng.laurent();
        Laurent yy = xx + rng.laurent_with_valuation_above(r.valuation());
        SwingSequence seq(r);
        bool all = true;
        for (size_t k = 0; k < 6; ++k)
            all = all && hyper_in(detail::point_region(yy), detail::point_region(xx), seq.at(k));
        if (!all) detail::record_failure(res, "level transfer (in-class)");
        Laurent zz = xx + Laurent::monomial(rng.positive_rational(), r.valuation());
        bool escaped = false;
        for (size_t k = 0; k < 64 && !escaped; ++k)
            if (!hyper_in(detail::point_region(zz), detail::point_region(xx), seq.at(k)))
                escaped = true;
        if (!escaped) detail::record_failure(res, "level transfer (escape)");

        // level-structured: finite-depth proximity yields a strictly finer radius
        BallUnion B3 = detail::perturb_finer_than(rng, A, r.valuation());
        bool prem = true;
        for (size_t k = 0; k < 8; ++k) prem = prem && hyper_in(B3, A, seq.at(k));
        Laurent dev(0);
        for (size_t j = 0; j < A.size(); ++j)
            dev = detail::order_max(dev, (B3.balls()[j].center - A.balls()[j].center).abs());
        Radius tt(dev + dev + Laurent::monomial(1, r.valuation() + 1));
        if (!prem) {
            detail::record_failure(res, "level-structured premise");
        } else if (level_cmp(r, tt) != LevelRel::Lower || !hyper_in(B3, A, tt)) {
            detail::record_failure(res, "level-structured");
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// contraction: image bounds, degrees, radius-function structure
// ---------------------------------------------------------------------------
inline SuiteResult suite_contraction(size_t samples, uint64_t seed) {
    SuiteResult res{"contraction", samples};
    Rng rng(seed);
    std::vector<IFS> systems;
    for (const std::string& n : builtin_ifs_names()) systems.push_back(*builtin_ifs(n));
    systems.push_back(IFS({{Laurent(Rational(2, 3)), Laurent(1)}}));  // degree-2 synthetic

    for (size_t i = 0; i < samples; ++i) {
        BallUnion A = rng.ball_union(2);
        Radius r = rng.radius();
        for (const IFS& F : systems)
            if (!region_subset(regions_of(F(roll(A, r))), regions_of(roll(F(A), r))))
                detail::record_failure(res, "F(roll) inside roll(F)");

        const IFS& F = systems[static_cast<size_t>(rng.u64() % systems.size())];
        Laurent amax(0);
        for (const ContractionMap& m : F.maps()) amax = detail::order_max(amax, m.slope().abs());
        Laurent pw = amax.pow(F.degree());
        if (!(pw + pw <= Laurent(1))) detail::record_failure(res, "degree certificate");

        const ContractionMap& m = F.maps()[static_cast<size_t>(rng.u64() % F.maps().size())];
        Radius r2 = rng.radius();
        if (r.value() < r2.value() && !(m.scale(r).value() < m.scale(r2).value()))
            detail::record_failure(res, "radius function monotone");
        if (!(m.scale(r).value() <= r.value()))
            detail::record_failure(res, "s(r) <= r");
        int target = static_cast<int>(rng.range(-3, 3));
        Radius pre = rng.radius_at_level(target - *m.slope().abs().valuation());
        if (m.scale(pre).valuation() != target)
            detail::record_failure(res, "radius function level-surjective");
    }
    return res;
}

// ---------------------------------------------------------------------------
// proximity: representative coherence and alpha-preservation
// ---------------------------------------------------------------------------
inline SuiteResult suite_proximity(size_t samples, uint64_t seed) {
    SuiteResult res{"proximity", samples};
    Rng rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        Laurent x = rng.laurent();
        Radius r = rng.radius();
        Laurent ax = proximity_point(x, r);
        if (!in_level_set(ax, x, r)) detail::record_failure(res, "alpha in class");

        // coherence: a representative seen from a weakly finer level maps to itself
        Radius s = rng.radius_at_level(r.valuation() + static_cast<int>(rng.range(0, 3)));
        Laurent y = ax + rng.laurent_with_valuation_above(s.valuation());
        if (in_level_set(ax, y, s) && proximity_point(y, s) != ax)
            detail::record_failure(res, "alpha coherence");
    }
    for (const std::string& n : builtin_ifs_names()) {
        IFS F = *builtin_ifs(n);
        for (const ContractionMap& m : F.maps())
            if (!alpha_preserving_check(m, std::max<size_t>(samples / 10, 10), seed))
                detail::record_failure(res, "alpha-preserving: " + n);
    }
    return res;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------
inline std::vector<std::string> suite_names() {
    return {"laurent-field",   "beta-axioms",   "level-structure", "roll-symmetry",
            "sum-roll-oracle", "region-lemmas", "hyper-axioms",    "contraction",
            "proximity"};
}

inline SuiteResult run_suite(std::string_view name, size_t samples, uint64_t seed) {
    if (name == "laurent-field") return suite_laurent_field(samples, seed);
    if (name == "beta-axioms") return suite_beta_axioms(samples, seed);
    if (name == "level-structure") return suite_level_structure(samples, seed);
    if (name == "roll-symmetry") return suite_roll_symmetry(samples, seed);
    if (name == "sum-roll-oracle") return suite_sum_roll_oracle(samples, seed);
    if (name == "region-lemmas") return suite_region_lemmas(samples, seed);
    if (name == "hyper-axioms") return suite_hyper_axioms(samples, seed);
    if (name == "contraction") return suite_contraction(samples, seed);
    if (name == "proximity") return suite_proximity(samples, seed);
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

inline std::vector<SuiteResult> run_all_suites(size_t samples, uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const std::string& n : suite_names()) out.push_back(run_suite(n, samples, seed));
    return out;
}

}  // namespace betafract

#pragma once

#include <optional>
#include <vector>

#include "betafract/contraction.hpp"
#include "betafract/hyper.hpp"

namespace betafract {

struct IterationStep {
    size_t index = 0;
    size_t ball_count = 0;
    std::optional<Radius> certificate;  // radius at which F^{n+1}(A) in beta_H(F^n(A), .)
    std::optional<Radius> invariance;   // radius at which F(A_n) in beta_H(A_n, .)
};

struct IterationReport {
    std::vector<IterationStep> steps;
    bool converged = false;
    std::optional<size_t> certificate_step;
    std::vector<Ball> final_balls;
};

// Iterates A_{n+1} = F(A_n) from the seed and reports the first n at which
// F(A_n) is target-near A_n under beta_H, re-checking the pair as the
// invariance certificate. Hitting max_steps without a certificate is a
// distinguished outcome, not an error.
inline IterationReport iterate_to_fixed(const IFS& F, const BallUnion& seed,
                                        const Radius& target, size_t max_steps) {
    if (max_steps < 1) throw std::invalid_argument("iterate_to_fixed: max_steps < 1");
    IterationReport report;
    BallUnion cur = seed;
    for (size_t n = 0; n < max_steps; ++n) {
        BallUnion next = F(cur);
        IterationStep step;
        step.index = n;
        step.ball_count = cur.size();
        if (hyper_in(next, cur, target)) {
            step.certificate = target;
            if (hyper_in(F(cur), cur, target)) step.invariance = target;
            report.steps.push_back(step);
            report.converged = true;
            report.certificate_step = n;
            report.final_balls = next.balls();
            return report;
        }
        report.steps.push_back(step);
        cur = next;
    }
    report.final_balls = cur.balls();
    return report;
}

}  // namespace betafract

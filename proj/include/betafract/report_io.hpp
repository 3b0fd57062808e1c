#pragma once

#include <ostream>
#include <span>

#include "betafract/iterate.hpp"
#include "betafract/parse.hpp"
#include "betafract/roll.hpp"

namespace betafract {

// Line-oriented region dump, one region per line, compact literals so fields
// split on whitespace:
//   ball <center> <radius>
//   sumroll <center> <base-radius> <scale>
inline void dump_balls(std::ostream& os, std::span<const Ball> balls) {
    for (const Ball& b : balls)
        os << "ball " << to_string(b.center, false) << ' ' << to_string(b.radius.value(), false)
           << '\n';
}

inline void dump_sum_rolls(std::ostream& os, std::span<const SumRollRegion> regions) {
    for (const SumRollRegion& s : regions)
        os << "sumroll " << to_string(s.base.center, false) << ' '
           << to_string(s.base.radius.value(), false) << ' ' << to_string(s.scale.value(), false)
           << '\n';
}

inline void report_text(std::ostream& os, const IterationReport& report) {
    for (const IterationStep& s : report.steps) {
        os << "step=" << s.index << " ball_count=" << s.ball_count << " certificate_radius="
           << (s.certificate ? to_string(s.certificate->value(), false) : "null")
           << " invariance_radius="
           << (s.invariance ? to_string(s.invariance->value(), false) : "null") << '\n';
    }
    os << (report.converged ? "converged" : "no-certificate") << '\n';
}

}  // namespace betafract

// Minimal library walkthrough: build the small-cantor system, iterate it to a
// beta_H certificate at x^3, and show the non-metrizability witness (centers
// spread over one level per step).

#include <iostream>
#include <set>

#include "betafract/builtins.hpp"
#include "betafract/iterate.hpp"
#include "betafract/oracles.hpp"
#include "betafract/parse.hpp"

using namespace betafract;

int main() {
    IFS F = *builtin_ifs("small-cantor");
    BallUnion seed(*builtin_seed("small-cantor"));

    IterationReport rep = iterate_to_fixed(F, seed, Radius(Laurent::monomial(1, 3)), 10);
    std::cout << "certificate step: "
              << (rep.certificate_step ? std::to_string(*rep.certificate_step) : "none") << '\n';

    std::set<int> levels;
    for (const Ball& b : rep.final_balls) {
        if (!b.center.is_zero()) levels.insert(*b.center.valuation());
        if (!small_cantor_member(b.center)) {
            std::cout << "unexpected center " << to_string(b.center) << '\n';
            return 1;
        }
    }
    std::cout << "levels touched by centers:";
    for (int v : levels) std::cout << ' ' << v;
    std::cout << "\nball count: " << rep.final_balls.size() << '\n';
    return 0;
}

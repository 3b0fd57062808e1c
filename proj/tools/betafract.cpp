#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "betafract/builtins.hpp"
#include "betafract/ifs_file.hpp"
#include "betafract/iterate.hpp"
#include "betafract/oracles.hpp"
#include "betafract/report_io.hpp"
#include "betafract/suites.hpp"

using namespace betafract;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

IFS resolve_ifs(const std::string& name_or_path) {
    if (auto f = builtin_ifs(name_or_path)) return *f;
    std::ifstream in(name_or_path);
    if (!in) throw std::invalid_argument("unknown IFS and unreadable path: " + name_or_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_ifs_spec(buf.str());
}

Ball parse_seed(const std::string& lit) {
    size_t comma = lit.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("seed must be '<center>,<radius>': " + lit);
    return {parse_laurent(lit.substr(0, comma)), Radius(parse_laurent(lit.substr(comma + 1)))};
}

nlohmann::json report_json(const IterationReport& report) {
    nlohmann::json steps = nlohmann::json::array();
    for (const IterationStep& s : report.steps) {
        nlohmann::json row;
        row["step"] = s.index;
        row["ball_count"] = s.ball_count;
        row["certificate_radius"] =
            s.certificate ? nlohmann::json(to_string(s.certificate->value(), false))
                          : nlohmann::json(nullptr);
        row["invariance_radius"] = s.invariance
                                       ? nlohmann::json(to_string(s.invariance->value(), false))
                                       : nlohmann::json(nullptr);
        steps.push_back(std::move(row));
    }
    nlohmann::json out;
    out["steps"] = std::move(steps);
    out["converged"] = report.converged;
    if (report.certificate_step) out["certificate_step"] = *report.certificate_step;
    return out;
}

int cmd_iterate(const std::string& ifs_name, const std::string& seed_lit,
                const std::string& target_lit, size_t max_steps, const std::string& dump_path,
                const std::string& format) {
    IFS F = resolve_ifs(ifs_name);
    Ball seed = [&] {
        if (!seed_lit.empty()) return parse_seed(seed_lit);
        if (auto s = builtin_seed(ifs_name)) return *s;
        throw std::invalid_argument("no default seed for spec-file systems; pass --seed");
    }();
    Radius target(parse_laurent(target_lit));
    IterationReport report = iterate_to_fixed(F, BallUnion(seed), target, max_steps);
    if (format == "structured")
        std::cout << report_json(report).dump(2) << '\n';
    else
        report_text(std::cout, report);
    if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) throw std::invalid_argument("cannot write dump: " + dump_path);
        dump_balls(out, report.final_balls);
    }
    return kExitPass;
}

int cmd_member(const std::string& oracle, const std::string& point_lit) {
    Laurent p = parse_laurent(point_lit);
    bool verdict = false;
    if (oracle == "cantor") {
        if (!p.is_zero() && (p.term_count() != 1 || *p.valuation() != 0))
            verdict = false;
        else
            verdict = cantor_member(p.coeff(0));
    } else if (oracle == "stretched" || oracle == "stretched-cantor") {
        verdict = stretched_member(p);
    } else if (oracle == "small-cantor") {
        verdict = small_cantor_member(p);
    } else {
        throw std::invalid_argument("unknown oracle: " + oracle);
    }
    std::cout << (verdict ? "true" : "false") << '\n';
    return verdict ? kExitPass : kExitFail;
}

int cmd_axioms(const std::string& suite, size_t samples, uint64_t seed) {
    std::vector<SuiteResult> results;
    if (suite == "all")
        results = run_all_suites(samples, seed);
    else
        results.push_back(run_suite(suite, samples, seed));
    bool any_fail = false;
    for (const SuiteResult& r : results) {
        std::cout << (r.passed() ? "pass" : "FAIL") << "  " << r.name << "  samples=" << r.samples
                  << " failures=" << r.failures << '\n';
        for (const std::string& note : r.notes) std::cout << "    counterexample: " << note << '\n';
        any_fail = any_fail || !r.passed();
    }
    return any_fail ? kExitFail : kExitPass;
}

// Oracle consistency of the iterates: every center agrees with the matching
// attractor oracle (for cantor, up to the half-width that separates midpoints
// from interval endpoints), and described attractor points stay within the
// sum target-roll of the iterate.
int cmd_invariance(const std::string& ifs_name, size_t max_steps, const std::string& target_lit) {
    IFS F = resolve_ifs(ifs_name);
    auto seed = builtin_seed(ifs_name);
    if (!seed) throw std::invalid_argument("invariance needs a built-in IFS, got: " + ifs_name);
    Radius target(parse_laurent(target_lit));

    BallUnion cur(*seed);
    bool ok = true;
    for (size_t n = 1; n <= max_steps; ++n) {
        cur = F(cur);
        for (const Ball& b : cur.balls()) {
            bool good = true;
            if (ifs_name == "cantor") {
                good = cantor_member(b.center.coeff(0) - b.radius.lead()) ||
                       cantor_member(b.center.coeff(0) + b.radius.lead());
                good = good && b.center.term_count() <= 1;
            } else if (ifs_name == "stretched-cantor") {
                good = stretched_member(b.center);
            } else if (ifs_name == "small-cantor") {
                good = small_cantor_member(b.center);
            } else if (ifs_name == "cantor-paper-literal") {
                good = true;  // documented discrepancy: centers leave the Cantor set
            }
            if (!good) {
                std::cout << "FAIL center step=" << n << " center=" << to_string(b.center, false)
                          << '\n';
                ok = false;
            }
        }
    }
    std::vector<Laurent> attractor_points;
    if (ifs_name == "cantor") {
        attractor_points = {Laurent(Rational(1, 4)), Laurent(Rational(3, 4)),
                            Laurent(Rational(1, 10)), Laurent(Rational(3, 10))};
    } else if (ifs_name == "stretched-cantor") {
        attractor_points = {Laurent::monomial(Rational(1, 4), -1),
                            Laurent::monomial(Rational(3, 4), -1)};
    } else if (ifs_name == "small-cantor") {
        for (int m = 0; m + 1 < static_cast<int>(max_steps); ++m)
            attractor_points.push_back(Laurent::monomial(1, m));
    }
    for (const Laurent& p : attractor_points) {
        if (!sum_roll_member(p, cur, target)) {
            std::cout << "FAIL attractor point not approximated: " << to_string(p, false) << '\n';
            ok = false;
        }
    }
    std::cout << (ok ? "pass" : "FAIL") << "  invariance " << ifs_name << " steps=" << max_steps
              << '\n';
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fractal geometry on formal Laurent polynomials"};
    app.require_subcommand(1);

    std::string ifs_name, seed_lit, target_lit = "1/100", dump_path, format = "text";
    std::string oracle, point_lit, suite = "all";
    size_t max_steps = 12, samples = 200;
    uint64_t rng_seed = 42;

    CLI::App* iterate = app.add_subcommand("iterate", "iterate an IFS to its invariant set");
    iterate->add_option("--ifs", ifs_name, "built-in name or spec file path")->required();
    iterate->add_option("--seed", seed_lit, "seed ball '<center>,<radius>'");
    iterate->add_option("--target", target_lit, "proximity radius for the certificate");
    iterate->add_option("--max", max_steps, "maximum iterations");
    iterate->add_option("--dump", dump_path, "write final region dump to path");
    iterate->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    CLI::App* member = app.add_subcommand("member", "attractor membership oracle");
    member->add_option("--oracle", oracle, "cantor|stretched|small-cantor")->required();
    member->add_option("--point", point_lit, "laurent literal")->required();

    CLI::App* axioms = app.add_subcommand("axioms", "run property suites");
    axioms->add_option("--suite", suite, "suite name or 'all'");
    axioms->add_option("--samples", samples, "samples per suite");
    axioms->add_option("--seed-rng", rng_seed, "deterministic sampler seed");

    CLI::App* invariance = app.add_subcommand("invariance", "oracle consistency of iterates");
    invariance->add_option("--ifs", ifs_name, "built-in IFS name")->required();
    invariance->add_option("--max", max_steps, "iterations to check");
    invariance->add_option("--target", target_lit, "proximity radius for coverage checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (iterate->parsed())
            return cmd_iterate(ifs_name, seed_lit, target_lit, max_steps, dump_path, format);
        if (member->parsed()) return cmd_member(oracle, point_lit);
        if (axioms->parsed()) return cmd_axioms(suite, samples, rng_seed);
        if (invariance->parsed()) return cmd_invariance(ifs_name, max_steps, target_lit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

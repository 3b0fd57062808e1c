// End-to-end exercise of the CLI binary. Takes the binary path as argv[1];
// each command's exit status and key output lines are checked.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int g_failures = 0;
std::string g_cli;
std::filesystem::path g_tmp;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::filesystem::path out = g_tmp / "out.txt";
    std::string cmd = g_cli + " " + args + " > " + out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    return {code, buf.str()};
}

void check(bool ok, const std::string& what, const RunResult& r) {
    if (ok) {
        std::cout << "ok: " << what << '\n';
    } else {
        std::cout << "FAIL: " << what << "\n  exit=" << r.exit_code << "\n  output:\n"
                  << r.output << '\n';
        ++g_failures;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_driver <path-to-betafract>\n";
        return 2;
    }
    g_cli = argv[1];
    g_tmp = std::filesystem::temp_directory_path() / "betafract_cli_test";
    std::filesystem::create_directories(g_tmp);

    {
        RunResult r = run("iterate --ifs cantor --seed \"0.5,0.5\" --target \"1/243\" --max 12 "
                          "--format structured");
        bool ok = r.exit_code == 0;
        if (ok) {
            auto j = nlohmann::json::parse(r.output, nullptr, false);
            ok = !j.is_discarded() && j["converged"] == true && j["certificate_step"] == 3 &&
                 j["steps"][0]["ball_count"] == 1 &&
                 j["steps"][3]["certificate_radius"] == "1/243";
        }
        check(ok, "iterate cantor, structured report", r);
    }
    {
        std::filesystem::path dump = g_tmp / "dump.txt";
        RunResult r = run("iterate --ifs cantor --target \"1/243\" --max 12 --dump " +
                          dump.string());
        bool ok = r.exit_code == 0 && r.output.find("converged") != std::string::npos;
        std::ifstream in(dump);
        std::string line;
        size_t lines = 0;
        while (std::getline(in, line)) {
            ok = ok && line.rfind("ball ", 0) == 0 && line.find(' ') != std::string::npos;
            ++lines;
        }
        ok = ok && lines == 16;  // certificate at step 3, dump holds A_4
        check(ok, "iterate with region dump", r);
    }
    {
        RunResult r = run("member --oracle small-cantor --point \"1 - x + x^5\"");
        check(r.exit_code == 0 && r.output.find("true") != std::string::npos,
              "member small-cantor true", r);
    }
    {
        RunResult r = run("member --oracle cantor --point \"1/2\"");
        check(r.exit_code == 1 && r.output.find("false") != std::string::npos,
              "member cantor false", r);
    }
    {
        RunResult r = run("member --oracle stretched --point \"1/4*x^-1\"");
        check(r.exit_code == 0 && r.output.find("true") != std::string::npos,
              "member stretched true", r);
    }
    {
        RunResult r = run("member --oracle cantor --point \"))((\"");
        check(r.exit_code == 2, "malformed point exits 2", r);
    }
    {
        RunResult r = run("axioms --suite beta-axioms --samples 60 --seed-rng 42");
        check(r.exit_code == 0 && r.output.find("pass") != std::string::npos,
              "axioms single suite", r);
    }
    {
        RunResult r = run("axioms --suite all --samples 25 --seed-rng 7");
        check(r.exit_code == 0, "axioms all suites", r);
    }
    {
        RunResult r = run("axioms --suite nonsense");
        check(r.exit_code == 2, "unknown suite exits 2", r);
    }
    {
        RunResult r = run("invariance --ifs small-cantor --max 6 --target \"x^3\"");
        check(r.exit_code == 0 && r.output.find("pass") != std::string::npos,
              "invariance small-cantor", r);
    }
    {
        RunResult r = run("invariance --ifs cantor --max 8 --target \"1/243\"");
        check(r.exit_code == 0, "invariance cantor", r);
    }
    {
        std::filesystem::path spec = g_tmp / "custom.ifs";
        std::ofstream out(spec);
        out << "# halving pair\nmap a=1/2 b=0\nmap a=1/2 b=1/2\n";
        out.close();
        RunResult r = run("iterate --ifs " + spec.string() +
                          " --seed \"1/2,1/2\" --target \"1/64\" --max 10");
        check(r.exit_code == 0 && r.output.find("converged") != std::string::npos,
              "iterate from a spec file", r);
    }
    {
        RunResult r = run("iterate --ifs /no/such/file --target \"1/8\"");
        check(r.exit_code == 2, "missing spec file exits 2", r);
    }
    {
        std::filesystem::path spec = g_tmp / "custom.ifs";
        RunResult r = run("iterate --ifs " + spec.string() + " --target \"1/8\"");
        check(r.exit_code == 2 && r.output.find("--seed") != std::string::npos,
              "spec file without --seed exits 2", r);
    }
    {
        std::filesystem::path spec = g_tmp / "bad.ifs";
        std::ofstream out(spec);
        out << "map a=1 b=0\n";
        out.close();
        RunResult r = run("iterate --ifs " + spec.string() + " --target \"1/8\"");
        check(r.exit_code == 2 && r.output.find("line 1") != std::string::npos,
              "bad spec file reports its line", r);
    }

    if (g_failures == 0) {
        std::cout << "cli driver: all checks passed\n";
        return 0;
    }
    std::cout << "cli driver: " << g_failures << " checks failed\n";
    return 1;
}

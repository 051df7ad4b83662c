/** @file
 *  @brief Acceptance gate: drives the command line binary end to end and
 *         prints one PASS/FAIL line per criterion.
 *
 *  Usage: acceptance_tests <path-to-hypervel-cli>
 */
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

bool all_hold(const json& doc) {
    for (const auto& rep : doc["reports"]) {
        if (rep["verdict"] != "holds") return false;
    }
    return true;
}

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
    if (!ok) ++failures;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance_tests <path-to-hypervel-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const auto t0 = std::chrono::steady_clock::now();

    // Criterion 1: the scalar suite passes at default settings (10^4
    // samples) and the spot values match.
    {
        bool ok = true;
        const RunResult v = run(cli + " verify scalar --format json");
        ok = ok && v.code == 0;
        if (ok) {
            const json doc = json::parse(v.out, nullptr, false);
            ok = ok && !doc.is_discarded() && doc["samples"] == 10000 && all_hold(doc);
        }

        const RunResult sum = run(cli + " eval e_add '[0.5, 0.5]'");
        ok = ok && sum.code == 0 && sum.out == "0.80000000000000004\n";

        const RunResult absorb = run(cli + " eval e_add '[0.3, 1.0]'");
        ok = ok && absorb.code == 0 && absorb.out == "1\n";

        const RunResult table = run(cli + " table e_add --grid 0,c");
        ok = ok && table.code == 0 && table.out == "e_add,0,1\n0,0,1\n1,1,1\n";

        const RunResult bad = run(cli + " eval e_add '[1.5, 0.0]'");
        ok = ok && bad.code == 2;

        report(1, ok, "scalar suite holds; sums, absorbing boundary, table and domain errors");
    }

    // Criterion 2: the ball suite passes (dimensions 1, 2, 3 and 7 are
    // sampled inside every law).
    {
        const RunResult v = run(cli + " verify ball --format json");
        bool ok = v.code == 0;
        if (ok) {
            const json doc = json::parse(v.out, nullptr, false);
            ok = !doc.is_discarded() && all_hold(doc) && doc["reports"].size() >= 10;
        }
        report(2, ok, "ball suite holds across dimensions 1, 2, 3, 7 and the complex field");
    }

    // Criterion 3: the gyro suite finds associativity and commutativity
    // witnesses with gap > 1e-3 c, everything else holds, and the frozen
    // gamma value is exact to 1e-15.
    {
        const RunResult v = run(cli + " verify gyro --format json");
        bool ok = v.code == 0;
        if (ok) {
            const json doc = json::parse(v.out, nullptr, false);
            ok = !doc.is_discarded();
            int witnesses = 0;
            if (ok) {
                for (const auto& rep : doc["reports"]) {
                    const std::string law = rep["law"];
                    if (law == "gyro.associativity" || law == "gyro.commutativity") {
                        ok = ok && rep["verdict"] == "violated-as-expected" &&
                             rep["max_residual"].get<double>() > 1e-3 &&
                             rep.contains("counterexample");
                        ++witnesses;
                    } else {
                        ok = ok && rep["verdict"] == "holds";
                    }
                }
            }
            ok = ok && witnesses == 2;
        }

        const RunResult g = run(cli + " eval gamma '[[0.6, 0.0, 0.0]]'");
        ok = ok && g.code == 0 && std::abs(std::stod(g.out) - 1.25) <= 1e-15;

        report(3, ok, "gyro witnesses exceed 1e-3 c, laws hold, gamma(0.6c) = 1.25");
    }

    // Criterion 4: the multidimensional suite passes.
    {
        const RunResult v = run(cli + " verify multidim --format json");
        bool ok = v.code == 0;
        if (ok) {
            const json doc = json::parse(v.out, nullptr, false);
            ok = !doc.is_discarded() && all_hold(doc);
        }
        report(4, ok, "chained bijections, the cone and H_2 hold");
    }

    // Criterion 5: the mean-like suite passes.
    {
        const RunResult v = run(cli + " verify meanlike --format json");
        bool ok = v.code == 0;
        if (ok) {
            const json doc = json::parse(v.out, nullptr, false);
            ok = !doc.is_discarded() && all_hold(doc);
        }
        report(5, ok, "mean-like aggregation laws hold");
    }

    // Criterion 6: two identically seeded full runs are byte identical.
    {
        const RunResult a = run(cli + " verify all --seed 42 --format json");
        const RunResult b = run(cli + " verify all --seed 42 --format json");
        const bool ok = a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out;
        report(6, ok, "verify all --seed 42 is reproducible byte for byte");
    }

    // Criterion 7: the whole gate (which runs every suite twice over)
    // finishes well inside the one minute budget.
    {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(7, elapsed < 60.0,
               "all verification runs finished in " + std::to_string(elapsed) + " s");
    }

    return failures == 0 ? 0 : 1;
}

/** @file
 *  @brief The property suite driver: determinism, verdicts, exit codes.
 */
#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <hypervel/hypervel.hpp>

using namespace hypervel;

namespace {

VerifyConfig small_config(long long samples = 300) {
    VerifyConfig cfg;
    cfg.samples = samples;
    return cfg;
}

} // namespace

TEST_CASE("the suite registry is complete", "[verify]") {
    const auto names = suite_names();
    REQUIRE(names == std::vector<std::string>{"scalar", "ball", "gyro", "multidim", "meanlike"});

    std::size_t total = 0;
    for (const auto& n : names) {
        const auto laws = suite_laws(n);
        CHECK(laws.size() >= 5);
        for (const auto& law : laws) {
            CHECK(law.module == n);
            CHECK(law.name.starts_with(n + "."));
        }
        total += laws.size();
    }
    CHECK(suite_laws("all").size() == total);
    CHECK_THROWS_AS(suite_laws("nosuchsuite"), DomainViolation);
}

TEST_CASE("every claimed law holds at the documented tolerance", "[verify]") {
    for (const std::string name : {"scalar", "ball", "multidim", "meanlike"}) {
        const SuiteRun run = run_suite(name, small_config());
        CHECK(run.exit_code == 0);
        for (const auto& rep : run.reports) {
            INFO(rep.law);
            CHECK(rep.verdict == Verdict::holds);
            CHECK(rep.counterexample.empty());
            CHECK(rep.samples_run >= 1);
        }
    }
}

TEST_CASE("the gyro suite exhibits its documented non-laws", "[verify]") {
    const SuiteRun run = run_suite("gyro", small_config());
    CHECK(run.exit_code == 0);
    for (const auto& rep : run.reports) {
        INFO(rep.law);
        if (rep.law == "gyro.associativity" || rep.law == "gyro.commutativity") {
            CHECK(rep.verdict == Verdict::violated_as_expected);
            CHECK(rep.max_residual > 1e-3);
            CHECK(!rep.counterexample.empty());
        } else {
            CHECK(rep.verdict == Verdict::holds);
        }
    }
}

TEST_CASE("runs are deterministic in the seed", "[verify]") {
    const VerifyConfig cfg = small_config(200);
    const SuiteRun a = run_suite("all", cfg);
    const SuiteRun b = run_suite("all", cfg);
    CHECK(reports_to_json(a.header, a.reports) == reports_to_json(b.header, b.reports));

    VerifyConfig other = cfg;
    other.seed = 43;
    const SuiteRun c = run_suite("gyro", other);
    const SuiteRun d = run_suite("gyro", cfg);
    CHECK(reports_to_json(c.header, c.reports) != reports_to_json(d.header, d.reports));
}

TEST_CASE("law streams do not depend on suite order", "[verify]") {
    // A law must sample identically whether run alone or inside "all";
    // the stream is derived from the law name, not from position.
    const VerifyConfig cfg = small_config(200);
    const SuiteRun alone = run_suite("ball", cfg);
    const SuiteRun all = run_suite("all", cfg);

    for (const auto& rep : alone.reports) {
        bool found = false;
        for (const auto& inall : all.reports) {
            if (inall.law != rep.law) continue;
            found = true;
            CHECK(inall.max_residual == rep.max_residual);
            CHECK(inall.verdict == rep.verdict);
        }
        CHECK(found);
    }
}

TEST_CASE("a throwing law is an unexpected violation", "[verify]") {
    Law broken;
    broken.name = "synthetic.throws";
    broken.module = "synthetic";
    broken.run = [](const VerifyConfig&, Xoshiro256pp&, detail::LawResult&) {
        throw DomainViolation("synthetic failure");
    };
    const PropertyReport rep = run_law(broken, small_config());
    CHECK(rep.verdict == Verdict::violated_unexpectedly);
    CHECK(rep.counterexample.find("synthetic failure") != std::string::npos);
}

TEST_CASE("an expected violation that never shows up stays holds", "[verify]") {
    Law quiet;
    quiet.name = "synthetic.quiet";
    quiet.module = "synthetic";
    quiet.expect_violation = true;
    quiet.run = [](const VerifyConfig& cfg, Xoshiro256pp&, detail::LawResult& res) {
        for (long long i = 0; i < cfg.samples; ++i) {
            detail::record(res, 0.0, false, [] { return std::string("{}"); });
        }
    };
    const PropertyReport rep = run_law(quiet, small_config());
    CHECK(rep.verdict == Verdict::holds);
    CHECK(rep.counterexample.empty());
}

TEST_CASE("residual recording keeps the worst sample", "[verify]") {
    Law ramp;
    ramp.name = "synthetic.ramp";
    ramp.module = "synthetic";
    ramp.expect_violation = true;
    ramp.run = [](const VerifyConfig&, Xoshiro256pp&, detail::LawResult& res) {
        detail::record(res, 0.25, true, [] { return std::string("\"first\""); });
        detail::record(res, 0.75, true, [] { return std::string("\"worst\""); });
        detail::record(res, 0.50, true, [] { return std::string("\"later\""); });
    };
    const PropertyReport rep = run_law(ramp, small_config());
    CHECK(rep.verdict == Verdict::violated_as_expected);
    CHECK(rep.max_residual == 0.75);
    CHECK(rep.counterexample == "\"worst\"");
    CHECK(rep.samples_run == 3);
}

TEST_CASE("scale and tolerance are honored", "[verify]") {
    VerifyConfig cfg = small_config(200);
    cfg.c = 2.5;
    const SuiteRun run = run_suite("scalar", cfg);
    CHECK(run.exit_code == 0);
    CHECK(run.header.c == 2.5);
    for (const auto& rep : run.reports) {
        INFO(rep.law);
        CHECK(rep.verdict == Verdict::holds);
    }
}

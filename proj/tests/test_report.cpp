/** @file
 *  @brief Report serialization: stable numbers, JSON, CSV and text forms.
 */
#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <hypervel/report.hpp>

using namespace hypervel;
using nlohmann::json;

namespace {

RunHeader header() { return RunHeader{"scalar", 42, 1000, 1.0, 1e-9}; }

std::vector<PropertyReport> sample_reports() {
    PropertyReport ok{"scalar.commutativity", "scalar", 1000, 0.0, "", Verdict::holds};
    PropertyReport bad{"gyro.associativity", "gyro", 1000, 0.25,
                       "{\"u\":[0.5,0],\"note\":\"a \\\"quoted\\\" word\"}",
                       Verdict::violated_as_expected};
    return {ok, bad};
}

} // namespace

TEST_CASE("format_double is %.17g and round trips", "[report]") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.25) == "-0.25");
    CHECK(format_double(0.8) == "0.80000000000000004");
    CHECK(format_double(1e-9) == "1.0000000000000001e-09");
    CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("json_escape protects every special byte", "[report]") {
    CHECK(json_escape("plain") == "plain");
    CHECK(json_escape("a\"b") == "a\\\"b");
    CHECK(json_escape("a\\b") == "a\\\\b");
    CHECK(json_escape("a\nb\tc") == "a\\nb\\tc");
    CHECK(json_escape(std::string_view("a\x01z", 3)) == "a\\u0001z");
}

TEST_CASE("array renderers produce compact JSON", "[report]") {
    CHECK(json_number_array({}) == "[]");
    CHECK(json_number_array({0.5, 1.0}) == "[0.5,1]");
    CHECK(json_value_array({"[1]", "{\"a\":2}"}) == "[[1],{\"a\":2}]");
}

TEST_CASE("verdict names are the wire strings", "[report]") {
    CHECK(to_string(Verdict::holds) == "holds");
    CHECK(to_string(Verdict::violated_as_expected) == "violated-as-expected");
    CHECK(to_string(Verdict::violated_unexpectedly) == "violated-unexpectedly");
}

TEST_CASE("JSON output is one well formed line", "[report]") {
    const std::string s = reports_to_json(header(), sample_reports());
    CHECK(s.find('\n') == std::string::npos);

    const json d = json::parse(s);
    CHECK(d["suite"] == "scalar");
    CHECK(d["seed"] == 42);
    CHECK(d["samples"] == 1000);
    CHECK(d["c"] == 1.0);
    CHECK(d["tol"] == 1e-9);
    REQUIRE(d["reports"].size() == 2);

    const json& ok = d["reports"][0];
    CHECK(ok["law"] == "scalar.commutativity");
    CHECK(ok["module"] == "scalar");
    CHECK(ok["samples_run"] == 1000);
    CHECK(ok["max_residual"] == 0.0);
    CHECK(ok["verdict"] == "holds");
    CHECK(ok.contains("counterexample") == false);

    const json& bad = d["reports"][1];
    CHECK(bad["verdict"] == "violated-as-expected");
    CHECK(bad["max_residual"] == 0.25);
    REQUIRE(bad.contains("counterexample"));
    CHECK(bad["counterexample"]["u"] == json::array({0.5, 0}));
    CHECK(bad["counterexample"]["note"] == "a \"quoted\" word");
}

TEST_CASE("CSV output quotes the counterexample column", "[report]") {
    const std::string s = reports_to_csv(header(), sample_reports());
    CHECK(s.starts_with("suite,seed,samples,c,tol\nscalar,42,1000,1,1.0000000000000001e-09\n"));
    CHECK(s.find("law,module,samples_run,max_residual,verdict,counterexample\n") !=
          std::string::npos);
    CHECK(s.find("scalar.commutativity,scalar,1000,0,holds,\n") != std::string::npos);

    // Embedded quotes double, and the JSON payload rides in one cell.
    CHECK(s.find("\"{\"\"u\"\":[0.5,0],") != std::string::npos);
    CHECK(s.back() == '\n');
}

TEST_CASE("text output carries verdicts and a summary line", "[report]") {
    const std::string s = reports_to_text(header(), sample_reports());
    CHECK(s.find("suite scalar  seed=42  samples=1000") != std::string::npos);
    CHECK(s.find("[holds] scalar.commutativity") != std::string::npos);
    CHECK(s.find("[violated-as-expected] gyro.associativity") != std::string::npos);
    CHECK(s.find("counterexample={\"u\":[0.5,0]") != std::string::npos);
    CHECK(s.find("summary: 1 held, 1 violated as expected, 0 violated unexpectedly\n") !=
          std::string::npos);
    CHECK(s.back() == '\n');
}

TEST_CASE("csv_quote doubles embedded quotes", "[report]") {
    CHECK(csv_quote("plain") == "\"plain\"");
    CHECK(csv_quote("a\"b") == "\"a\"\"b\"");
}

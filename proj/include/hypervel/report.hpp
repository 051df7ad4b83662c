#pragma once

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace hypervel {

/// Outcome of one property law run.
enum class Verdict {
    holds,                 // no violation beyond the law's threshold
    violated_as_expected,  // a documented non-law; a witness was found
    violated_unexpectedly, // a claimed law failed
};

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated_as_expected: return "violated-as-expected";
        case Verdict::violated_unexpectedly: return "violated-unexpectedly";
    }
    return "unknown";
}

/// Result record for one law: the largest residual observed over all
/// samples and, when the verdict is a violation, a JSON-encoded
/// counterexample (the operand tuple producing the largest residual).
struct PropertyReport {
    std::string law;
    std::string module;
    long long samples_run = 0;
    double max_residual = 0.0;
    std::string counterexample; // JSON value; empty when the law holds
    Verdict verdict = Verdict::holds;
};

/// Shortest round-trip-safe decimal rendering (17 significant digits via
/// %.17g, C locale). All numeric output flows through here so that equal
/// inputs always serialize to identical bytes.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

/// JSON array of numbers.
inline std::string json_number_array(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_double(v[i]);
    }
    out += "]";
    return out;
}

/// JSON array of pre-rendered JSON values.
inline std::string json_value_array(const std::vector<std::string>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    out += "]";
    return out;
}

/// Header describing one verification run; echoed into every output
/// format so results are self-describing and reproducible.
struct RunHeader {
    std::string suite;
    unsigned long long seed = 0;
    long long samples = 0;
    double c = 1.0;
    double tol = 1e-9;
};

inline std::string report_to_json(const PropertyReport& r) {
    std::string out = "{";
    out += "\"law\":\"" + json_escape(r.law) + "\",";
    out += "\"module\":\"" + json_escape(r.module) + "\",";
    out += "\"samples_run\":" + std::to_string(r.samples_run) + ",";
    out += "\"max_residual\":" + format_double(r.max_residual) + ",";
    if (!r.counterexample.empty()) {
        out += "\"counterexample\":" + r.counterexample + ",";
    }
    out += "\"verdict\":\"" + std::string(to_string(r.verdict)) + "\"";
    out += "}";
    return out;
}

inline std::string reports_to_json(const RunHeader& h, const std::vector<PropertyReport>& rs) {
    std::string out = "{";
    out += "\"suite\":\"" + json_escape(h.suite) + "\",";
    out += "\"seed\":" + std::to_string(h.seed) + ",";
    out += "\"samples\":" + std::to_string(h.samples) + ",";
    out += "\"c\":" + format_double(h.c) + ",";
    out += "\"tol\":" + format_double(h.tol) + ",";
    out += "\"reports\":[";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) out += ",";
        out += report_to_json(rs[i]);
    }
    out += "]}";
    return out;
}

inline std::string csv_quote(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

inline std::string reports_to_csv(const RunHeader& h, const std::vector<PropertyReport>& rs) {
    std::string out = "suite,seed,samples,c,tol\n";
    out += h.suite + "," + std::to_string(h.seed) + "," + std::to_string(h.samples) + "," +
           format_double(h.c) + "," + format_double(h.tol) + "\n";
    out += "law,module,samples_run,max_residual,verdict,counterexample\n";
    for (const auto& r : rs) {
        out += r.law + "," + r.module + "," + std::to_string(r.samples_run) + "," +
               format_double(r.max_residual) + "," + std::string(to_string(r.verdict)) + "," +
               (r.counterexample.empty() ? std::string() : csv_quote(r.counterexample)) + "\n";
    }
    return out;
}

inline std::string reports_to_text(const RunHeader& h, const std::vector<PropertyReport>& rs) {
    std::string out = "suite " + h.suite + "  seed=" + std::to_string(h.seed) +
                      "  samples=" + std::to_string(h.samples) + "  c=" + format_double(h.c) +
                      "  tol=" + format_double(h.tol) + "\n";
    int holds = 0, expected = 0, unexpected = 0;
    for (const auto& r : rs) {
        std::string line = "  [" + std::string(to_string(r.verdict)) + "] " + r.law +
                           "  samples=" + std::to_string(r.samples_run) +
                           "  max_residual=" + format_double(r.max_residual);
        if (!r.counterexample.empty()) line += "  counterexample=" + r.counterexample;
        out += line + "\n";
        switch (r.verdict) {
            case Verdict::holds: ++holds; break;
            case Verdict::violated_as_expected: ++expected; break;
            case Verdict::violated_unexpectedly: ++unexpected; break;
        }
    }
    out += "summary: " + std::to_string(holds) + " held, " + std::to_string(expected) +
           " violated as expected, " + std::to_string(unexpected) + " violated unexpectedly\n";
    return out;
}

} // namespace hypervel

// hypervel command line front-end: evaluate operations, emit composition
// tables, and run the property-verification suites.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hypervel/hypervel.hpp>

namespace hv = hypervel;
using nlohmann::json;

namespace {

double as_double(const json& j, const char* what) {
    if (!j.is_number()) throw hv::DomainViolation(std::string(what) + " must be a number");
    return j.get<double>();
}

std::vector<double> as_vector(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw hv::DomainViolation(std::string(what) + " must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_double(e, what));
    return out;
}

void expect_arity(const json& operands, std::size_t n, const char* op) {
    if (!operands.is_array() || operands.size() != n)
        throw hv::DomainViolation(std::string(op) + " expects " + std::to_string(n) +
                                  " operand(s) in a JSON array");
}

hv::MeanPair as_mean_pair(const json& j, const hv::Params& p, const char* what) {
    const auto v = as_vector(j, what);
    if (v.size() != 2)
        throw hv::DomainViolation(std::string(what) + " must be a [weight, value] pair");
    return hv::MeanPair(v[0], v[1], p);
}

std::string num(double x) { return hv::format_double(x); }

std::string arr(const std::vector<double>& v) { return hv::json_number_array(v); }

std::vector<hv::BijectionDescriptor> make_family(const std::string& name, std::size_t n) {
    if (name == "identity") return hv::identity_family(n);
    if (name == "tanh") return hv::tanh_family(n);
    throw hv::DomainViolation("unknown bijection family '" + name +
                              "' (expected \"identity\" or \"tanh\")");
}

std::string run_eval(const std::string& op, const json& operands, const hv::Params& p) {
    if (op == "e_add" || op == "e_mul") {
        expect_arity(operands, 2, op.c_str());
        const hv::EScalar u(as_double(operands[0], "operand"), p);
        const hv::EScalar v(as_double(operands[1], "operand"), p);
        return num(op == "e_add" ? hv::e_add(u, v).value() : hv::e_mul(u, v).value());
    }
    if (op == "e_neg") {
        expect_arity(operands, 1, op.c_str());
        return num(hv::e_neg(hv::EScalar(as_double(operands[0], "operand"), p)).value());
    }
    if (op == "e_inverse") {
        expect_arity(operands, 1, op.c_str());
        return num(hv::baker_inverse(as_double(operands[0], "operand"), p.c));
    }
    if (op == "e_mul_identity") {
        expect_arity(operands, 0, op.c_str());
        return num(hv::e_mul_identity(p).value());
    }
    if (op == "e_compare") {
        expect_arity(operands, 2, op.c_str());
        const auto ord = hv::e_compare(hv::EScalar(as_double(operands[0], "operand"), p),
                                       hv::EScalar(as_double(operands[1], "operand"), p));
        return ord < 0 ? "-1" : (ord > 0 ? "1" : "0");
    }
    if (op == "phi") {
        expect_arity(operands, 1, op.c_str());
        const hv::ExtendedReal x = (operands[0].is_string() && operands[0] == "inf")
                                       ? hv::ExtendedReal::infinity()
                                       : hv::ExtendedReal(as_double(operands[0], "operand"));
        return num(hv::phi(x, p).value());
    }
    if (op == "phi_inv") {
        expect_arity(operands, 1, op.c_str());
        const hv::ExtendedReal r =
            hv::phi_inv(hv::EScalar(as_double(operands[0], "operand"), p));
        return r.is_infinite() ? std::string("\"inf\"") : num(r.value());
    }
    if (op == "gamma") {
        const json& vj = (operands.is_array() && !operands.empty() && operands[0].is_array())
                             ? operands[0]
                             : operands;
        return num(hv::gamma_factor(as_vector(vj, "velocity"), p.c));
    }
    if (op == "ball_add") {
        expect_arity(operands, 2, op.c_str());
        const hv::BallVector u(as_vector(operands[0], "operand"), p);
        const hv::BallVector v(as_vector(operands[1], "operand"), p);
        return arr(hv::ball_add(u, v).components());
    }
    if (op == "ball_neg") {
        expect_arity(operands, 1, op.c_str());
        return arr(hv::ball_neg(hv::BallVector(as_vector(operands[0], "operand"), p)).components());
    }
    if (op == "ball_phi") {
        expect_arity(operands, 1, op.c_str());
        return arr(hv::ball_phi(as_vector(operands[0], "operand"), p).components());
    }
    if (op == "ball_phi_inv") {
        expect_arity(operands, 1, op.c_str());
        return arr(hv::ball_phi_inv(hv::BallVector(as_vector(operands[0], "operand"), p)));
    }
    if (op == "complex_add" || op == "complex_mul") {
        expect_arity(operands, 2, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        const auto b = as_vector(operands[1], "operand");
        if (a.size() != 2 || b.size() != 2)
            throw hv::DomainViolation(op + " operands must be [re, im] pairs");
        const hv::ComplexBallPoint u(a[0], a[1], p), v(b[0], b[1], p);
        const hv::ComplexBallPoint w =
            op == "complex_add" ? hv::complex_add(u, v) : hv::complex_mul(u, v);
        return arr({w.re(), w.im()});
    }
    if (op == "complex_neg" || op == "complex_inverse") {
        expect_arity(operands, 1, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        if (a.size() != 2) throw hv::DomainViolation(op + " operand must be a [re, im] pair");
        const hv::ComplexBallPoint u(a[0], a[1], p);
        const hv::ComplexBallPoint w =
            op == "complex_neg" ? hv::complex_neg(u) : hv::complex_mul_inverse(u);
        return arr({w.re(), w.im()});
    }
    if (op == "complex_mul_identity") {
        expect_arity(operands, 0, op.c_str());
        const hv::ComplexBallPoint w = hv::complex_mul_identity(p);
        return arr({w.re(), w.im()});
    }
    if (op == "gyro_add" || op == "gyro_add_cross") {
        expect_arity(operands, 2, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        const auto b = as_vector(operands[1], "operand");
        if (a.size() != 3 || b.size() != 3)
            throw hv::DomainViolation(op + " operands must be 3-vectors");
        const hv::GyroVector3 u(a[0], a[1], a[2], p), v(b[0], b[1], b[2], p);
        const hv::GyroVector3 w =
            op == "gyro_add" ? hv::gyro_add_inner(u, v) : hv::gyro_add_cross(u, v);
        return arr(w.to_vector());
    }
    if (op == "moebius_add" || op == "moebius_involution") {
        expect_arity(operands, 2, op.c_str());
        const hv::UnitBallVector w(as_vector(operands[0], "operand"));
        const hv::UnitBallVector z(as_vector(operands[1], "operand"));
        const hv::UnitBallVector r =
            op == "moebius_add" ? hv::moebius_add(w, z) : hv::moebius_involution(w, z);
        return arr(r.components());
    }
    if (op == "chain_forward" || op == "chain_inverse") {
        expect_arity(operands, 2, op.c_str());
        if (!operands[0].is_string())
            throw hv::DomainViolation(op + " expects [family, coordinates]");
        const auto x = as_vector(operands[1], "coordinates");
        const auto links = make_family(operands[0].get<std::string>(), x.size());
        return arr(op == "chain_forward" ? hv::chain_forward(x, links)
                                         : hv::chain_inverse(x, links));
    }
    if (op == "tanh_map_forward") {
        expect_arity(operands, 1, op.c_str());
        return arr(hv::tanh_map_forward(hv::DPoint(as_vector(operands[0], "operand"))).coords());
    }
    if (op == "tanh_map_inverse") {
        expect_arity(operands, 1, op.c_str());
        return arr(hv::tanh_map_inverse(hv::HPoint(as_vector(operands[0], "operand"))).coords());
    }
    if (op == "h_add") {
        expect_arity(operands, 2, op.c_str());
        const hv::HPoint x(as_vector(operands[0], "operand"));
        const hv::HPoint y(as_vector(operands[1], "operand"));
        return arr(hv::h_add(x, y).coords());
    }
    if (op == "hyperbolic_mul") {
        expect_arity(operands, 2, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        const auto b = as_vector(operands[1], "operand");
        if (a.size() != 2 || b.size() != 2)
            throw hv::DomainViolation(op + " operands must be [a, b] pairs");
        const hv::ConePoint r = hv::hyperbolic_mul(hv::ConePoint(a[0], a[1]),
                                                   hv::ConePoint(b[0], b[1]));
        return arr({r.a(), r.b()});
    }
    if (op == "hyperbolic_inverse") {
        expect_arity(operands, 1, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        if (a.size() != 2) throw hv::DomainViolation(op + " operand must be an [a, b] pair");
        const hv::ConePoint r = hv::hyperbolic_inverse(hv::ConePoint(a[0], a[1]));
        return arr({r.a(), r.b()});
    }
    if (op == "cone_map_forward") {
        expect_arity(operands, 1, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        if (a.size() != 2) throw hv::DomainViolation(op + " operand must be an [a, b] pair");
        const hv::H2Point y = hv::cone_map_forward(hv::ConePoint(a[0], a[1]));
        return arr({y.y1(), y.y2()});
    }
    if (op == "cone_map_inverse") {
        expect_arity(operands, 1, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        if (a.size() != 2) throw hv::DomainViolation(op + " operand must be a [y1, y2] pair");
        const hv::ConePoint r = hv::cone_map_inverse(hv::H2Point(a[0], a[1]));
        return arr({r.a(), r.b()});
    }
    if (op == "h2_add" || op == "h2_mul") {
        expect_arity(operands, 2, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        const auto b = as_vector(operands[1], "operand");
        if (a.size() != 2 || b.size() != 2)
            throw hv::DomainViolation(op + " operands must be [y1, y2] pairs");
        const hv::H2Point x(a[0], a[1]), y(b[0], b[1]);
        const hv::H2Point r = op == "h2_add" ? hv::h2_add(x, y) : hv::h2_mul(x, y);
        return arr({r.y1(), r.y2()});
    }
    if (op == "h2_mul_inverse") {
        expect_arity(operands, 1, op.c_str());
        const auto a = as_vector(operands[0], "operand");
        if (a.size() != 2) throw hv::DomainViolation(op + " operand must be a [y1, y2] pair");
        const hv::H2Point r = hv::h2_mul_inverse(hv::H2Point(a[0], a[1]));
        return arr({r.y1(), r.y2()});
    }
    if (op == "h2_mul_identity") {
        expect_arity(operands, 0, op.c_str());
        const hv::H2Point r = hv::h2_mul_identity();
        return arr({r.y1(), r.y2()});
    }
    if (op == "mean_add_arithmetic" || op == "mean_add_harmonic") {
        expect_arity(operands, 2, op.c_str());
        const hv::MeanPair a = as_mean_pair(operands[0], p, "operand");
        const hv::MeanPair b = as_mean_pair(operands[1], p, "operand");
        const hv::MeanPair r = op == "mean_add_arithmetic" ? hv::mean_add_arithmetic(a, b)
                                                           : hv::mean_add_harmonic(a, b);
        return arr({r.a(), r.b()});
    }
    if (op == "agg_add") {
        expect_arity(operands, 3, op.c_str());
        if (!operands[0].is_string())
            throw hv::DomainViolation("agg_add expects [action, pair, pair]");
        const std::string action = operands[0].get<std::string>();
        const hv::MeanPair a = as_mean_pair(operands[1], p, "operand");
        const hv::MeanPair b = as_mean_pair(operands[2], p, "operand");
        const hv::ScalarSystem ws = hv::einstein_scalar_system(p.c);
        hv::ActionSystem as = action == "arithmetic" ? hv::arithmetic_action_system(p.c)
                              : action == "harmonic"
                                  ? hv::harmonic_action_system(p.c)
                                  : throw hv::DomainViolation(
                                        "unknown action '" + action +
                                        "' (expected \"arithmetic\" or \"harmonic\")");
        const hv::MeanPair r = hv::agg_add(a, b, ws, as);
        return arr({r.a(), r.b()});
    }
    throw hv::DomainViolation("unknown operation '" + op + "'");
}

std::vector<double> parse_grid(const std::string& text, double c) {
    const auto colon1 = text.find(':');
    if (colon1 != std::string::npos) {
        const auto colon2 = text.find(':', colon1 + 1);
        if (colon2 == std::string::npos)
            throw hv::DomainViolation("grid range must be lo:hi:count");
        const double lo = std::stod(text.substr(0, colon1));
        const double hi = std::stod(text.substr(colon1 + 1, colon2 - colon1 - 1));
        const long count = std::stol(text.substr(colon2 + 1));
        if (count < 1) throw hv::DomainViolation("grid count must be >= 1");
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(count));
        for (long i = 0; i < count; ++i)
            out.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) /
                                                     static_cast<double>(count - 1));
        return out;
    }
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? text.size() - pos
                                                                      : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty()) throw hv::DomainViolation("empty grid token");
        if (tok == "c")
            out.push_back(c);
        else if (tok == "-c")
            out.push_back(-c);
        else
            out.push_back(std::stod(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw hv::DomainViolation("grid is empty");
    return out;
}

std::string run_table(const std::string& op, const std::string& grid_spec, const hv::Params& p) {
    const std::vector<double> grid = parse_grid(grid_spec, p.c);
    std::function<double(double)> unary;
    std::function<double(double, double)> binary;
    if (op == "e_add")
        binary = [&](double u, double v) {
            return hv::e_add(hv::EScalar(u, p), hv::EScalar(v, p)).value();
        };
    else if (op == "e_mul")
        binary = [&](double u, double v) {
            return hv::e_mul(hv::EScalar(u, p), hv::EScalar(v, p)).value();
        };
    else if (op == "e_neg")
        unary = [&](double u) { return hv::e_neg(hv::EScalar(u, p)).value(); };
    else if (op == "e_inverse")
        unary = [&](double u) { return hv::baker_inverse(u, p.c); };
    else if (op == "phi")
        unary = [&](double x) { return hv::phi(hv::ExtendedReal(x), p).value(); };
    else
        throw hv::DomainViolation("table does not support operation '" + op + "'");

    std::string out = op;
    for (double v : grid) out += "," + num(v);
    out += "\n";
    if (binary) {
        for (double u : grid) {
            out += num(u);
            for (double v : grid) out += "," + num(binary(u, v));
            out += "\n";
        }
    } else {
        out += "value";
        for (double v : grid) out += "," + num(unary(v));
        out += "\n";
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded velocity-style arithmetic: evaluation, tables, law verification"};
    app.require_subcommand(1);

    double c = 1.0;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    long long samples = 10000;
    std::string format = "json";
    std::string op;
    std::string operands_json;
    std::string grid_spec;
    std::string suite;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one operation on JSON operands");
    eval_cmd->add_option("op", op, "operation name")->required();
    eval_cmd->add_option("operands", operands_json, "operands as one JSON array argument");
    eval_cmd->add_option("--c", c, "scale parameter c");
    eval_cmd->add_option("--tol", tol, "tolerance echoed to consumers");

    CLI::App* table_cmd = app.add_subcommand("table", "emit a CSV composition table");
    table_cmd->add_option("op", op, "scalar operation name")->required();
    table_cmd->add_option("--grid", grid_spec, "comma list (tokens c and -c allowed) or lo:hi:count")
        ->required();
    table_cmd->add_option("--c", c, "scale parameter c");
    table_cmd->add_option("--tol", tol, "tolerance echoed to consumers");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a property-verification suite");
    verify_cmd->add_option("suite", suite, "scalar|ball|gyro|multidim|meanlike|all")
        ->required()
        ->check(CLI::IsMember({"scalar", "ball", "gyro", "multidim", "meanlike", "all"}));
    verify_cmd->add_option("--seed", seed, "RNG seed")->envname("HYPERVEL_SEED");
    verify_cmd->add_option("--samples", samples, "samples per law");
    verify_cmd->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify_cmd->add_option("--c", c, "scale parameter c");
    verify_cmd->add_option("--tol", tol, "tolerance echoed into reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tol <= 0.0) throw hv::DomainViolation("tol must be positive");
        if (samples < 1) throw hv::DomainViolation("samples must be >= 1");
        if (eval_cmd->parsed()) {
            const json operands = json::parse(operands_json.empty() ? "[]" : operands_json);
            std::cout << run_eval(op, operands, hv::Params(c, tol)) << "\n";
            return 0;
        }
        if (table_cmd->parsed()) {
            std::cout << run_table(op, grid_spec, hv::Params(c, tol));
            return 0;
        }
        hv::VerifyConfig cfg;
        cfg.c = c;
        cfg.tol = tol;
        cfg.seed = seed;
        cfg.samples = samples;
        const hv::SuiteRun run = hv::run_suite(suite, cfg);
        if (format == "json")
            std::cout << hv::reports_to_json(run.header, run.reports) << "\n";
        else if (format == "csv")
            std::cout << hv::reports_to_csv(run.header, run.reports);
        else
            std::cout << hv::reports_to_text(run.header, run.reports);
        return run.exit_code;
    } catch (const json::exception& e) {
        std::cerr << "error: invalid JSON operands: " << e.what() << "\n";
        return 2;
    } catch (const hv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

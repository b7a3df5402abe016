#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "json_io.hpp"
#include "qoperad/codes.hpp"
#include "qoperad/error.hpp"
#include "qoperad/qstate_operad.hpp"

namespace {

using namespace qoperad;
using io::Json;

constexpr int kExitFailures = 1;
constexpr int kExitError = 2;

Json read_json(const std::string &path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        require(static_cast<bool>(in), ErrorCode::InvalidInput, "cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

void emit(const Json &j, const std::string &out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    require(static_cast<bool>(f), ErrorCode::InvalidInput, "cannot write '" + out + "'");
    f << text;
}

Json error_json(ErrorCode code, const std::string &message) {
    return Json{{"error", {{"code", std::string(error_code_name(code))}, {"message", message}}}};
}

const Json &field(const Json &j, const char *key) {
    require(j.is_object() && j.contains(key), ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T, class F>
std::vector<T> array_of(const Json &j, F &&parse) {
    require(j.is_array(), ErrorCode::InvalidInput, "expected an array");
    std::vector<T> out;
    for (const auto &x : j) out.push_back(parse(x));
    return out;
}

DensityMatrix state_from_json(const Json &j) { return DensityMatrix(io::matrix_from_json(j)); }

ProbVector prob_from_json(const Json &j) { return ProbVector(j.get<std::vector<double>>()); }

/// "i" is 1-based in envelopes.
std::size_t slot_from_json(const Json &env) {
    const auto i = field(env, "i").get<long long>();
    require(i >= 1, ErrorCode::IndexOutOfRange, "\"i\" is 1-based");
    return static_cast<std::size_t>(i - 1);
}

Json inner_of(const Json &env) {
    if (env.contains("inner")) return env["inner"];
    const Json &parts = field(env, "parts");
    require(parts.is_array() && parts.size() == 1, ErrorCode::InvalidInput, "insertion takes one inner operand");
    return parts[0];
}

Json run_compose(const Json &env) {
    const std::string op = field(env, "op").get<std::string>();
    Json result;
    if (op == "gammaP" || op == "gammaLambda") {
        const auto root = state_from_json(field(env, "root"));
        const auto parts = array_of<DensityMatrix>(field(env, "parts"), state_from_json);
        result = io::matrix_to_json((op == "gammaP" ? gamma_p(root, parts) : gamma_lambda(root, parts)).matrix());
    } else if (op == "insertP" || op == "insertLambda") {
        const auto root = state_from_json(field(env, "root"));
        const auto inner = state_from_json(inner_of(env));
        const std::size_t slot = slot_from_json(env);
        result = io::matrix_to_json((op == "insertP" ? insert_p(root, slot, inner) : insert_lambda(root, slot, inner)).matrix());
    } else if (op == "composeProb") {
        const auto root = prob_from_json(field(env, "root"));
        const auto parts = array_of<ProbVector>(field(env, "parts"), prob_from_json);
        result = compose_prob(root, parts).values();
    } else if (op == "composeSquares") {
        const auto outer = io::tuple_from_json(field(env, "outer"));
        result = io::tuple_to_json(compose_squares(outer, slot_from_json(env), io::tuple_from_json(inner_of(env))));
    } else if (op == "composeColored") {
        const auto outer = io::colored_from_json(field(env, "outer"));
        if (env.contains("i")) {
            result = io::colored_to_json(
                compose_colored(outer, slot_from_json(env), io::colored_from_json(inner_of(env))));
        } else {
            const auto parts = array_of<ColoredPArySquare>(field(env, "parts"), io::colored_from_json);
            result = io::colored_to_json(compose_colored_full(outer, parts));
        }
    } else if (op == "algebraAction") {
        if (env.contains("channel")) {
            const auto channel = io::channel_from_json(env["channel"]);
            const auto states = array_of<DensityMatrix>(field(env, "states"), state_from_json);
            result = io::matrix_to_json(algebra_action(channel, states).matrix());
        } else {
            const auto square = io::colored_from_json(field(env, "square"));
            const auto parts = array_of<AlmostSymplectic>(field(env, "parts"), io::omega_from_json);
            result = io::omega_to_json(algebra_action(square, parts));
        }
    } else if (op == "composeQC") {
        const auto outer = io::channel_from_json(field(env, "outer"));
        const auto parts = array_of<TreeKrausChannel>(field(env, "parts"), io::channel_from_json);
        result = io::channel_to_json(compose_qc(outer, parts));
    } else if (op == "differential") {
        result = io::channel_sum_to_json(differential(io::channel_from_json(field(env, "channel"))));
    } else {
        fail(ErrorCode::InvalidInput, "unknown op '" + op + "'");
    }
    return Json{{"op", op}, {"input_hash", io::content_hash(env)}, {"result", std::move(result)}};
}

/// Classical, tree, quantum and thermodynamic entropies; the fields present
/// in the envelope select the quantity.
Json run_entropy(const Json &env) {
    const EntropyFamily family = io::family_from_json(field(env, "family"));
    Json out{{"input_hash", io::content_hash(env)}};
    if (env.contains("beta")) {
        const auto tree = io::tree_from_json(field(env, "tree"));
        const auto xs = field(env, "x").get<std::vector<double>>();
        const auto r = thermo_minimize(family, tree, xs, field(env, "beta").get<double>());
        out["quantity"] = "thermo";
        out["value"] = r.value;
        out["minimizer"] = r.minimizer;
    } else if (env.contains("state")) {
        const auto rho = state_from_json(env["state"]);
        if (env.contains("tree")) {
            out["quantity"] = "quantum_tree";
            out["value"] = tree_entropy_quantum(family, io::measurement_tree_from_json(env["tree"]), rho);
        } else {
            out["quantity"] = "quantum";
            out["value"] = quantum_entropy(family, rho);
        }
    } else {
        const auto p = field(env, "p").get<std::vector<double>>();
        if (env.contains("tree")) {
            out["quantity"] = "classical_tree";
            out["value"] = tree_entropy_classical(family, io::tree_from_json(env["tree"]), p);
        } else {
            out["quantity"] = "classical";
            out["value"] = classical_entropy(family, ProbVector(p));
        }
    }
    return out;
}

std::vector<std::string> split_csv(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

/// Eigenvalue entries are angles in turns: "t" means exp(2 pi i t); "1/3" is
/// accepted as a fraction.
Complex parse_turns(const std::string &s) {
    double t = 0.0;
    try {
        const auto slash = s.find('/');
        t = slash == std::string::npos ? std::stod(s) : std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    } catch (const std::exception &) {
        fail(ErrorCode::InvalidInput, "bad eigenvalue angle '" + s + "'");
    }
    return std::polar(1.0, 2.0 * 3.14159265358979323846 * t);
}

Json run_codes(const std::string &omega_file, unsigned k, const std::string &tuple_s, const std::string &lambda_s) {
    const AlmostSymplectic omega = io::omega_from_json(read_json(omega_file));
    std::vector<std::size_t> tuple;
    for (const auto &t : split_csv(tuple_s)) {
        try {
            tuple.push_back(std::stoul(t));
        } catch (const std::exception &) {
            fail(ErrorCode::InvalidInput, "bad tuple entry '" + t + "'");
        }
    }
    std::vector<Complex> lambda;
    for (const auto &l : split_csv(lambda_s)) lambda.push_back(parse_turns(l));
    const LoopAlgebra h(omega);
    const CodeSpace code = code_space(h, k, tuple, lambda);
    Json basis = Json::array();
    for (Eigen::Index c = 0; c < code.basis.cols(); ++c) {
        Json re = Json::array(), im = Json::array();
        for (Eigen::Index r = 0; r < code.basis.rows(); ++r) {
            re.push_back(code.basis(r, c).real());
            im.push_back(code.basis(r, c).imag());
        }
        basis.push_back(Json{{"re", std::move(re)}, {"im", std::move(im)}});
    }
    return Json{{"dimension", code.dimension()},
                {"chi", k},
                {"tuple", tuple},
                {"basis", std::move(basis)},
                {"residuals", code.residual}};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qoperad: operadic structures on probabilities, quantum states, channels, loops and little squares"};
    app.require_subcommand(1);

    auto *list = app.add_subcommand("list", "List verification suites");

    std::string suite, scale = "small", out;
    std::uint64_t seed = 0;
    bool timing = false;
    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite (or 'all')");
    verify_cmd->add_option("suite", suite, "Suite id or 'all'")->required();
    verify_cmd->add_option("--seed", seed, "RNG seed")->required();
    verify_cmd->add_option("--scale", scale, "small or full")->check(CLI::IsMember({"small", "full"}));
    verify_cmd->add_option("--out", out, "Write the report to a file");
    verify_cmd->add_flag("--timing", timing, "Include wall time in the report");

    std::string input = "-";
    auto *compose = app.add_subcommand("compose", "Apply a composition envelope");
    compose->add_option("input", input, "Envelope file, '-' for stdin");
    compose->add_option("--out", out, "Write the result to a file");

    auto *entropy = app.add_subcommand("entropy", "Evaluate an entropy envelope");
    entropy->add_option("input", input, "Envelope file, '-' for stdin");
    entropy->add_option("--out", out, "Write the result to a file");

    std::string omega_file, tuple_s, lambda_s;
    unsigned chi = 0;
    auto *codes = app.add_subcommand("codes", "Loop-algebra code spaces");
    codes->require_subcommand(1);
    auto *build = codes->add_subcommand("build", "Common eigenspace of E_u on H_chi");
    build->add_option("--omega", omega_file, "omega table JSON")->required();
    build->add_option("--chi", chi, "Character index k")->required();
    build->add_option("--tuple", tuple_s, "Comma-separated vectors of V (base-p indices)")->required();
    build->add_option("--lambda", lambda_s, "Comma-separated eigenvalue angles in turns")->required();
    build->add_option("--out", out, "Write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            Json suites = Json::array();
            for (const auto &s : verify::all_suites())
                suites.push_back(Json{{"name", s.name}, {"module", s.module}, {"description", s.description}});
            emit(Json{{"schema", 1}, {"suites", std::move(suites)}}, out);
            return 0;
        }
        if (*verify_cmd) {
            const verify::Scale sc = verify::parse_scale(scale);
            std::vector<std::string> names;
            if (suite == "all") {
                for (const auto &s : verify::all_suites()) names.push_back(s.name);
            } else if (verify::find_suite(suite) == nullptr) {
                std::cerr << "unknown suite '" << suite << "'; see 'qoperad list'\n";
                return kExitError;
            } else {
                names.push_back(suite);
            }
            bool ok = true;
            Json reports = Json::array();
            for (const auto &name : names) {
                const auto report = verify::run_suite(name, seed, sc);
                ok = ok && report.passed();
                reports.push_back(io::report_to_json(report, timing));
            }
            if (names.size() == 1) {
                emit(reports[0], out);
            } else {
                emit(Json{{"schema", 1}, {"seed", seed}, {"scale", scale}, {"passed", ok}, {"reports", std::move(reports)}},
                     out);
            }
            return ok ? 0 : kExitFailures;
        }
        if (*compose) {
            emit(run_compose(read_json(input)), out);
            return 0;
        }
        if (*entropy) {
            emit(run_entropy(read_json(input)), out);
            return 0;
        }
        if (*build) {
            emit(run_codes(omega_file, chi, tuple_s, lambda_s), out);
            return 0;
        }
    } catch (const Error &e) {
        emit(error_json(e.code(), e.what()), out);
        return kExitError;
    } catch (const nlohmann::json::exception &e) {
        emit(error_json(ErrorCode::InvalidInput, e.what()), out);
        return kExitError;
    }
    return 0;
}

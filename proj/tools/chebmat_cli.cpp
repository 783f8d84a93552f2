// chebmat command-line front end. Talks to the library exclusively through
// the C API in chebmat/chebmat.h; formatting and envelope assembly happen
// here, on parsed JSON payloads.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "chebmat/chebmat.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitHypothesis = 4;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

[[noreturn]] void fail_status(chebmat_status st) {
    std::string msg = chebmat_last_error();
    switch (st) {
        case CHEBMAT_ERR_PARSE: fail(kExitParse, msg);
        case CHEBMAT_ERR_HYPOTHESIS: fail(kExitHypothesis, msg);
        case CHEBMAT_ERR_INVALID:
        case CHEBMAT_ERR_RANGE:
        case CHEBMAT_ERR_UNSUPPORTED: fail(kExitUsage, msg);
        default: fail(kExitFailure, msg);
    }
}

struct MatrixHandle {
    chebmat_matrix* m = nullptr;
    ~MatrixHandle() { chebmat_matrix_free(m); }
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    chebmat_string_free(s);
    return out;
}

struct MatrixSource {
    std::string family;
    int index = 0;
    std::string matrix_path;
    CLI::Option* index_option = nullptr;

    void add_options(CLI::App* cmd) {
        auto* fam = cmd->add_option("--family,-f", family,
                                    "diagram family (A, D, E6..E8, L, Atilde, Dtilde, "
                                    "E6tilde..E8tilde, Ltilde, DLtilde)");
        index_option = cmd->add_option("--n,--index", index, "family index (subscript)");
        auto* mat = cmd->add_option("--matrix,-m", matrix_path,
                                    "matrix file ({\"n\":..,\"rows\":[[..]]}), '-' for stdin");
        fam->excludes(mat);
        mat->excludes(fam);
        mat->excludes(index_option);
        index_option->needs(fam);
    }

    json descriptor(const MatrixHandle& handle) const {
        int n = 0;
        chebmat_matrix_dim(handle.m, &n);
        if (!family.empty()) return json{{"family", family}, {"index", index}, {"n", n}};
        return json{{"source", matrix_path == "-" ? "stdin" : matrix_path}, {"n", n}};
    }

    void load(MatrixHandle& handle) {
        if (family.empty() && matrix_path.empty())
            fail(kExitUsage, "exactly one matrix source is required: --family or --matrix");
        if (!family.empty()) {
            const bool has_index = index_option && index_option->count() > 0;
            chebmat_status st =
                chebmat_diagram_adjacency(family.c_str(), has_index ? index : 0, &handle.m);
            if (st != CHEBMAT_OK) fail_status(st);
            return;
        }
        std::string text;
        if (matrix_path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream in(matrix_path);
            if (!in) fail(kExitParse, "cannot open matrix file '" + matrix_path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        chebmat_status st = chebmat_matrix_parse_json(text.c_str(), &handle.m);
        if (st != CHEBMAT_OK) fail_status(st);
    }
};

json parse_payload(const std::string& text) { return json::parse(text); }

// ---------------------------------------------------------------------------
// Rendering

bool use_color() {
    return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string bold(const std::string& s) { return use_color() ? "\033[1m" + s + "\033[0m" : s; }

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string leaf_to_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_csv(const json& envelope, std::ostream& os) {
    os << "path,value\n";
    json flat = envelope.flatten();
    for (const auto& [path, value] : flat.items())
        os << csv_escape(path.substr(1)) << "," << csv_escape(leaf_to_string(value)) << "\n";
}

std::string matrix_grid(const json& m) {
    const auto& rows = m.at("rows");
    size_t width = 1;
    for (const auto& row : rows)
        for (const auto& v : row) width = std::max(width, leaf_to_string(v).size());
    std::ostringstream os;
    for (const auto& row : rows) {
        os << "  ";
        for (size_t j = 0; j < row.size(); ++j) {
            std::string s = leaf_to_string(row[j]);
            os << std::string(width - s.size(), ' ') << s << (j + 1 < row.size() ? " " : "");
        }
        os << "\n";
    }
    return os.str();
}

void render_pretty(const json& envelope, std::ostream& os) {
    const std::string command = envelope.at("command");
    const json& result = envelope.at("result");
    os << bold("chebmat " + command) << "  input " << envelope.at("input").dump() << "\n";
    if (command == "eval") {
        os << "f_" << result.at("k").get<long>() << " =\n" << matrix_grid(result.at("f_k"));
    } else if (command == "period") {
        if (result.at("found").get<bool>()) {
            os << "periodic: first zero at " << result.at("first_zero").get<long>()
               << ", period " << result.at("period").get<long>() << " (f_"
               << result.at("period").get<long>() - 1 << " = 0, f_"
               << result.at("period").get<long>() << " = I)\n";
        } else {
            os << "no zero found up to k_max = " << result.at("k_max").get<long>() << "\n";
        }
    } else if (command == "growth") {
        if (result.at("found").get<bool>()) {
            const json& cert = result.at("certificate");
            os << "linear growth: q = " << cert.at("q").get<long>() << ", kind "
               << cert.at("kind").get<std::string>() << ", Z =\n"
               << matrix_grid(cert.at("z"));
            if (result.contains("promoted")) {
                const json& p = result.at("promoted");
                os << "promoted: q = " << p.at("q").get<long>() << ", kind "
                   << p.at("kind").get<std::string>() << "\n";
            }
        } else {
            os << "no growth certificate up to k_max = " << result.at("k_max").get<long>() << "\n";
        }
    } else if (command == "classify") {
        os << "verdict: " << result.at("verdict").get<std::string>() << "\n";
        if (result.contains("period_certificate"))
            os << "  period " << result.at("period_certificate").at("period").get<long>()
               << ", first zero " << result.at("period_certificate").at("first_zero").get<long>()
               << "\n";
        if (result.contains("growth_certificate"))
            os << "  growth step q = " << result.at("growth_certificate").at("q").get<long>()
               << " (" << result.at("growth_certificate").at("kind").get<std::string>() << ")\n";
        if (result.contains("wild_evidence"))
            os << "  entry " << leaf_to_string(result.at("wild_evidence").at("max_entry"))
               << " at k = " << result.at("wild_evidence").at("k").get<long>()
               << " exceeds linear envelope " << leaf_to_string(result.at("wild_evidence").at("envelope"))
               << "\n";
        if (!result.at("family").is_null())
            os << "  diagram: " << result.at("family").at("family").get<std::string>() << "_"
               << result.at("family").at("index").get<int>() << "\n";
    } else if (command == "resolve") {
        os << "resolution of S_" << result.at("simple").get<int>() << " ("
           << result.at("family").get<std::string>() << "_" << result.at("index").get<int>()
           << ")\n";
        os << "  step  projectives                simple\n";
        for (const json& s : result.at("steps")) {
            std::ostringstream proj;
            proj << "(";
            const json& p = s.at("projectives");
            for (size_t j = 0; j < p.size(); ++j)
                proj << leaf_to_string(p[j]) << (j + 1 < p.size() ? "," : "");
            proj << ")";
            os << "  " << s.at("k").get<long>() << "\t" << proj.str();
            if (!s.at("simple_hit").is_null()) os << "\tS_" << s.at("simple_hit").get<int>();
            os << "\n";
        }
        const json& summary = result.at("summary");
        if (summary.contains("resolution_period")) {
            os << "period: "
               << (summary.at("resolution_period").is_null()
                       ? std::string("none found")
                       : std::to_string(summary.at("resolution_period").get<long>()))
               << "\n";
        } else {
            os << "growth factor: q = " << summary.at("growth_factor").get<long>() << " ("
               << summary.at("growth_kind").get<std::string>() << "), tabulated q = "
               << summary.at("tabulated_q").get<long>() << "\n";
        }
        for (const json& w : result.at("warnings"))
            os << "warning: " << w.get<std::string>() << "\n";
    } else {
        os << envelope.dump(2) << "\n";
    }
}

void emit(const json& envelope, const std::string& format) {
    if (format == "json") {
        std::cout << envelope.dump(2) << "\n";
    } else if (format == "csv") {
        render_csv(envelope, std::cout);
    } else {
        render_pretty(envelope, std::cout);
    }
}

json envelope_for(const std::string& command, const json& input, json result) {
    return json{{"schema", 1}, {"command", command}, {"input", input}, {"result", std::move(result)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chebyshev evaluation on diagram adjacency matrices"};
    app.require_subcommand(1);
    std::string format = "pretty";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();

    MatrixSource eval_src, period_src, growth_src, classify_src;
    long eval_k = 0;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate f_k on a matrix");
    eval_src.add_options(eval_cmd);
    eval_cmd->add_option("--k,-k", eval_k, "Chebyshev index (>= -1)")->required();

    long period_kmax = 0;
    auto* period_cmd = app.add_subcommand("period", "detect and certify periodicity");
    period_src.add_options(period_cmd);
    period_cmd->add_option("--kmax", period_kmax, "scan bound (default: policy)");

    long growth_kmax = 0;
    auto* growth_cmd = app.add_subcommand("growth", "detect and certify linear growth");
    growth_src.add_options(growth_cmd);
    growth_cmd->add_option("--kmax", growth_kmax, "scan bound (default: policy)");

    long classify_kmax = 0;
    auto* classify_cmd = app.add_subcommand("classify", "finite / tame / wild classification");
    classify_src.add_options(classify_cmd);
    classify_cmd->add_option("--kmax", classify_kmax, "scan bound (default: policy)");

    std::string resolve_family;
    int resolve_index = 0;
    int resolve_simple = 0;
    long resolve_steps = 0;
    auto* resolve_cmd = app.add_subcommand("resolve", "trace a minimal projective resolution");
    resolve_cmd->add_option("--family,-f", resolve_family, "diagram family")->required();
    resolve_cmd->add_option("--n,--index", resolve_index, "family index");
    resolve_cmd->add_option("--simple,-s", resolve_simple, "simple module index (1-based)")
        ->required();
    resolve_cmd->add_option("--steps", resolve_steps, "number of syzygy steps")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) {
            MatrixHandle handle;
            eval_src.load(handle);
            char* payload = nullptr;
            chebmat_status st = chebmat_eval_json(handle.m, eval_k, &payload);
            if (st != CHEBMAT_OK) fail_status(st);
            emit(envelope_for("eval", eval_src.descriptor(handle), parse_payload(take_string(payload))),
                 format);
        } else if (period_cmd->parsed()) {
            MatrixHandle handle;
            period_src.load(handle);
            char* payload = nullptr;
            chebmat_status st = chebmat_period_json(handle.m, period_kmax, &payload);
            if (st != CHEBMAT_OK) fail_status(st);
            emit(envelope_for("period", period_src.descriptor(handle),
                              parse_payload(take_string(payload))),
                 format);
        } else if (growth_cmd->parsed()) {
            MatrixHandle handle;
            growth_src.load(handle);
            char* payload = nullptr;
            chebmat_status st = chebmat_growth_json(handle.m, growth_kmax, &payload);
            if (st != CHEBMAT_OK) fail_status(st);
            emit(envelope_for("growth", growth_src.descriptor(handle),
                              parse_payload(take_string(payload))),
                 format);
        } else if (classify_cmd->parsed()) {
            MatrixHandle handle;
            classify_src.load(handle);
            char* payload = nullptr;
            chebmat_status st = chebmat_classify_json(handle.m, classify_kmax, &payload);
            if (st != CHEBMAT_OK) fail_status(st);
            emit(envelope_for("classify", classify_src.descriptor(handle),
                              parse_payload(take_string(payload))),
                 format);
        } else if (resolve_cmd->parsed()) {
            char* payload = nullptr;
            chebmat_status st = chebmat_resolve_json(resolve_family.c_str(), resolve_index,
                                                     resolve_simple, resolve_steps, &payload);
            if (st != CHEBMAT_OK) fail_status(st);
            json result = parse_payload(take_string(payload));
            json input{{"family", resolve_family},
                       {"index", result.at("index")},
                       {"simple", resolve_simple},
                       {"steps", resolve_steps}};
            emit(envelope_for("resolve", input, std::move(result)), format);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

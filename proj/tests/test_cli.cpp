// End-to-end checks of the command-line tool: flag handling, exit codes,
// output formats. The binary path arrives as argv[1] from ctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

std::string g_cli;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd;
    if (!stdin_data.empty()) {
        std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                          "/chebmat_cli_stdin.json";
        std::ofstream(tmp) << stdin_data;
        cmd = g_cli + " " + args + " < " + tmp + " 2>/dev/null";
    } else {
        cmd = g_cli + " " + args + " 2>/dev/null";
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("eval of a diagram family") {
    auto r = run("--format json eval --family A --n 3 --k 3");
    REQUIRE(r.exit_code == 0);
    json env = json::parse(r.out);
    CHECK(env["schema"] == 1);
    CHECK(env["command"] == "eval");
    CHECK(env["input"]["family"] == "A");
    for (const auto& row : env["result"]["f_k"]["rows"])
        for (const auto& v : row) CHECK(v == 0);

    auto lt = run("--format json eval --family Ltilde --n 4 --k 3");
    REQUIRE(lt.exit_code == 0);
    for (const auto& row : json::parse(lt.out)["result"]["f_k"]["rows"])
        for (const auto& v : row) CHECK(v == 1);
}

TEST_CASE("eval of a matrix file and stdin") {
    std::string path = write_temp("m2.json", R"({"n":2,"rows":[[0,1],[1,0]]})");
    auto r = run("--format json eval --matrix " + path + " --k 0");
    REQUIRE(r.exit_code == 0);
    json env = json::parse(r.out);
    CHECK(env["result"]["f_k"]["rows"] == json::parse("[[1,0],[0,1]]"));

    auto s = run("--format json eval --matrix - --k 0", R"({"n":2,"rows":[[0,1],[1,0]]})");
    REQUIRE(s.exit_code == 0);
    CHECK(json::parse(s.out)["result"]["f_k"]["rows"] == json::parse("[[1,0],[0,1]]"));
    CHECK(json::parse(s.out)["input"]["source"] == "stdin");
}

TEST_CASE("usage and parse failures set the contracted exit codes") {
    CHECK(run("eval --k 3").exit_code == 2);                                // no source
    CHECK(run("eval --family A --n 3 --matrix x.json --k 1").exit_code == 2);  // both sources
    CHECK(run("eval --family Q --n 3 --k 1").exit_code == 2);               // unknown family
    CHECK(run("eval --family A --n 1 --k 1").exit_code == 2);               // index bounds
    CHECK(run("resolve --family A --n 4 --simple 9 --steps 3").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);

    std::string bad = write_temp("bad.json", "{ not json");
    CHECK(run("eval --matrix " + bad + " --k 1").exit_code == 3);
    std::string ragged = write_temp("ragged.json", R"({"n":2,"rows":[[0,1]]})");
    CHECK(run("eval --matrix " + ragged + " --k 1").exit_code == 3);
    CHECK(run("eval --matrix /does/not/exist.json --k 1").exit_code == 3);

    // hypothesis/model violations: exit 4
    std::string asym = write_temp("asym.json", R"({"n":2,"rows":[[0,1],[0,0]]})");
    CHECK(run("classify --matrix " + asym).exit_code == 2);  // validation -> usage
    std::string negdiag = write_temp("neg.json", R"({"n":2,"rows":[[0,2],[2,0]]})");
    auto rr = run("resolve --family A --n 2 --simple 1 --steps 4");
    CHECK(rr.exit_code == 0);
}

TEST_CASE("period, growth, classify against known families") {
    auto p = run("--format json period --family L --n 3");
    REQUIRE(p.exit_code == 0);
    json pj = json::parse(p.out)["result"];
    CHECK(pj["found"] == true);
    CHECK(pj["period"] == 14);  // f_13 = 0, f_14 = I

    auto g = run("--format json growth --family Atilde --n 5");
    REQUIRE(g.exit_code == 0);
    json gj = json::parse(g.out)["result"];
    CHECK(gj["certificate"]["q"] == 6);
    CHECK(gj["certificate"]["kind"] == "uniform");

    std::string star = write_temp("star5.json",
        R"({"n":6,"rows":[[0,1,1,1,1,1],[1,0,0,0,0,0],[1,0,0,0,0,0],[1,0,0,0,0,0],[1,0,0,0,0,0],[1,0,0,0,0,0]]})");
    auto c = run("--format json classify --matrix " + star);
    REQUIRE(c.exit_code == 0);
    CHECK(json::parse(c.out)["result"]["verdict"] == "wild");

    auto fin = run("--format json classify --family A --n 5");
    CHECK(json::parse(fin.out)["result"]["verdict"] == "finite");
    CHECK(json::parse(fin.out)["result"]["family"]["family"] == "A");
}

TEST_CASE("resolve traces") {
    auto r = run("--format json resolve --family A --n 4 --simple 1 --steps 8");
    REQUIRE(r.exit_code == 0);
    json steps = json::parse(r.out)["result"]["steps"];
    REQUIRE(steps.size() == 9);
    CHECK(steps[4]["simple_hit"] == 4);
    CHECK(steps[8]["simple_hit"] == 1);

    // E6 arm swap: S_1's syzygy at step 11 is S_5 under this labeling
    auto e6 = run("--format json resolve --family E6 --simple 1 --steps 22");
    REQUIRE(e6.exit_code == 0);
    json es = json::parse(e6.out)["result"];
    CHECK(es["steps"][11]["simple_hit"] == 5);
    CHECK(es["steps"][22]["simple_hit"] == 1);
    CHECK(es["summary"]["resolution_period"] == 22);

    auto cover = run("--format json resolve --family A --n 4 --simple 2 --steps 0");
    json cs = json::parse(cover.out)["result"]["steps"];
    REQUIRE(cs.size() == 1);
    CHECK(cs[0]["projectives"] == json::parse("[0,1,0,0]"));
}

TEST_CASE("formats carry the same payload") {
    auto j = run("--format json eval --family A --n 3 --k 2");
    auto c = run("--format csv eval --family A --n 3 --k 2");
    auto p = run("--format pretty eval --family A --n 3 --k 2");
    REQUIRE(j.exit_code == 0);
    REQUIRE(c.exit_code == 0);
    REQUIRE(p.exit_code == 0);

    json env = json::parse(j.out);
    // every leaf of the json envelope appears in the csv output
    json flat = env.flatten();
    CHECK(c.out.rfind("path,value\n", 0) == 0);
    for (const auto& [path, value] : flat.items()) {
        std::string key = path.substr(1);
        CHECK(c.out.find(key) != std::string::npos);
    }
    // pretty shows the matrix grid
    CHECK(p.out.find("f_2") != std::string::npos);

    // byte-for-byte determinism
    auto j2 = run("--format json eval --family A --n 3 --k 2");
    CHECK(j.out == j2.out);
}

int main(int argc, char** argv) {
    doctest::Context context;
    context.applyCommandLine(argc > 1 ? 1 : argc, argv);
    if (argc > 1) g_cli = argv[1];
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-chebmat-binary>\n");
        return 1;
    }
    return context.run();
}

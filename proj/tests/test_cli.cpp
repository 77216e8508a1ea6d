#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

// Drives the installed binary end to end. The test runner exports
// SBAN_CLI_BIN with the freshly built executable's path.

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("SBAN_CLI_BIN");
    REQUIRE_MESSAGE(p != nullptr, "SBAN_CLI_BIN must point at the CLI binary");
    return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        "'" + cli_path() + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("sban_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("generate, graph, and kappa pipeline on the swap network") {
    const auto dir = scratch_dir();
    const auto inst = dir / "swap4.json";

    CHECK(run("gen --kind swap --n 4 -o " + q(inst)).code == 0);
    REQUIRE(std::filesystem::exists(inst));

    const RunResult graph = run("graph -i " + q(inst) + " --format json");
    REQUIRE(graph.code == 0);
    const json g = json::parse(graph.out);
    CHECK(g["n"] == 4);
    CHECK(g["nodes"] == 16);
    CHECK(g["edges"].size() > 0);

    const RunResult kap = run("kappa -i " + q(inst) + " --format json");
    REQUIRE(kap.code == 0);
    const json k = json::parse(kap.out);
    CHECK(k["kappa"]["lower"] == 2);
    CHECK(k["kappa"]["upper"] == 2);
    CHECK(k["kappa"]["exact"] == true);
    CHECK_FALSE(k["witness"].is_null());

    // human output stays human
    const RunResult human = run("kappa -i " + q(inst));
    CHECK(human.code == 0);
    CHECK(human.out.find("kappa") != std::string::npos);

    std::filesystem::remove_all(dir);
}

TEST_CASE("quotient, chromatic, and clique agree on the worked example") {
    const auto dir = scratch_dir();
    const auto inst = dir / "figure.json";
    REQUIRE(run("gen --kind figure4 --n 4 -o " + q(inst)).code == 0);

    const json quot = json::parse(run("graph -i " + q(inst) + " --quotient --format json").out);
    CHECK(quot["vertices"].size() == 4);
    CHECK(quot["edges"].size() == 3);

    const json chi = json::parse(run("chromatic -i " + q(inst) + " --format json").out);
    CHECK(chi["lower"] == 2);
    CHECK(chi["upper"] == 2);
    CHECK(chi["exact"] == true);

    const json clique = json::parse(run("clique -i " + q(inst) + " --format json").out);
    CHECK(clique["size"] == 2);

    // a graph file is also accepted as chromatic/clique input
    const auto gfile = dir / "necc.json";
    REQUIRE(run("graph -i " + q(inst) + " -o " + q(gfile)).code == 0);
    const json chi2 = json::parse(run("chromatic -i " + q(gfile) + " --format json").out);
    CHECK(chi2["upper"] == 2);

    std::filesystem::remove_all(dir);
}

TEST_CASE("synthesize and verify round trip, including a tampered bundle") {
    const auto dir = scratch_dir();
    const auto inst = dir / "swap2.json";
    const auto bundle = dir / "bundle.json";
    REQUIRE(run("gen --kind swap --n 2 -o " + q(inst)).code == 0);
    REQUIRE(run("synthesize -i " + q(inst) + " -o " + q(bundle)).code == 0);

    const json ok =
        json::parse(run("verify -i " + q(bundle) + " --against " + q(inst) + " --format json").out);
    CHECK(ok["pass"] == true);
    CHECK(ok["states_checked"] == 8);

    // flip one image bit in the simulator table: verification must fail but
    // the tool still exits 0, the report is the product
    json b = json::parse(std::ifstream(bundle.string()), nullptr, true);
    b["network"]["table"][0] = b["network"]["table"][0].get<std::uint64_t>() ^ 1u;
    std::ofstream(bundle.string()) << b.dump(2);

    const RunResult bad = run("verify -i " + q(bundle) + " --against " + q(inst) + " --format json");
    CHECK(bad.code == 0);
    const json rep = json::parse(bad.out);
    CHECK(rep["pass"] == false);
    CHECK(rep["extension_ok"] == true);
    CHECK_FALSE(rep["counterexample"].is_null());

    std::filesystem::remove_all(dir);
}

TEST_CASE("export renders DOT and refuses instance input") {
    const auto dir = scratch_dir();
    const auto inst = dir / "fig.json";
    const auto gfile = dir / "graph.json";
    REQUIRE(run("gen --kind figure4 --n 4 -o " + q(inst)).code == 0);
    REQUIRE(run("graph -i " + q(inst) + " -o " + q(gfile)).code == 0);

    const RunResult dot = run("export -i " + q(gfile));
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph") != std::string::npos);
    CHECK(dot.out.find("--") != std::string::npos); // undirected edge syntax

    const RunResult refused = run("export -i " + q(inst), /*merge_stderr=*/true);
    CHECK(refused.code == 1);
    CHECK(refused.out.find("error:") != std::string::npos);

    std::filesystem::remove_all(dir);
}

TEST_CASE("search subcommand reports the exhaustive sweep") {
    const json rep =
        json::parse(run("search --n 2 --strategy exhaustive --format json").out);
    CHECK(rep["instances_total"] == 768);
    CHECK(rep["worst_exact"] == 1);
    CHECK(rep["conjecture"] == "respected");
    CHECK(rep["completed"] == true);
}

TEST_CASE("exit codes separate usage errors from domain errors") {
    CHECK(run("--help").code == 0);
    CHECK(run("no-such-command", true).code == 2);
    CHECK(run("kappa", true).code == 2);             // missing required -i
    CHECK(run("gen --kind swap --n 4 --format yaml", true).code == 2);

    const RunResult missing = run("kappa -i /nonexistent/x.json", true);
    CHECK(missing.code == 1);
    CHECK(missing.out.find("error:") != std::string::npos);

    // a network too large for the requested analysis is a resource refusal
    const auto dir = scratch_dir();
    const auto big = dir / "big.json";
    REQUIRE(run("gen --kind random --n 16 --seed 1 -o " + q(big)).code == 0);
    const RunResult refused = run("kappa -i " + q(big), true);
    CHECK(refused.code == 1);
    CHECK(refused.out.find("error:") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_SUITE_END();

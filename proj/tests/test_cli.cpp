#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <string>

// End-to-end tests driving the installed binary. QUATIMAGE_CLI_PATH is
// injected by the build.

namespace {

using Json = nlohmann::json;

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run_shell(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, got);
    }
    const int status = pclose(pipe);
    RunResult r;
    r.out = out;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Captures stdout; stderr discarded.
RunResult cli(const std::string& args) {
    return run_shell(std::string("\"") + QUATIMAGE_CLI_PATH + "\" " + args +
                     " 2>/dev/null");
}

/// Captures stderr; stdout discarded.
RunResult cli_err(const std::string& args) {
    return run_shell(std::string("\"") + QUATIMAGE_CLI_PATH + "\" " + args +
                     " 2>&1 1>/dev/null");
}

/// Environment-prefixed invocation, stdout captured.
RunResult cli_env(const std::string& env, const std::string& args) {
    return run_shell("env " + env + " \"" + QUATIMAGE_CLI_PATH + "\" " + args +
                     " 2>/dev/null");
}

}  // namespace

TEST_CASE("classify emits the verdict as JSON") {
    const RunResult r = cli("classify -p \"s4\"");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["class"] == "ZERO_PI");
    CHECK(j["scalar_evidence"].is_null());
    CHECK(j["vector_evidence"].is_null());

    const Json b = Json::parse(cli("classify -p \"[x1,x2]\"").out);
    CHECK(b["class"] == "VECTORS_V");
    CHECK(b["vector_evidence"]["tuple"] == Json::array({"i", "j"}));
    CHECK(b["vector_evidence"]["value"]["coeff"] == "2");
    CHECK(b["vector_evidence"]["value"]["axis"] == "k");
}

TEST_CASE("witness round trip through the CLI") {
    const RunResult r = cli("witness -p \"x1*x2\" -t \"3+4i\"");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["class"] == "FULL_H");
    CHECK(j["verified"] == true);
    CHECK(j["target"]["re"] == "3");
    CHECK(j["target"]["i"] == "4");
    CHECK(j["args"].size() == 2);
}

TEST_CASE("witness accepts the documented literal forms") {
    for (const char* t : {"\"j\"", "\"-i\"", "\"1/2\"", "\"1/2-j+2k\"",
                          "\"0\"", "\"-2 + j - k\""}) {
        const RunResult r =
            cli(std::string("witness -p \"x1*x2\" -t ") + t);
        CHECK(r.code == 0);
        CHECK(Json::parse(r.out)["verified"] == true);
    }
}

TEST_CASE("witness of an identity") {
    const RunResult ok = cli("witness -p \"s4\" -t \"0\"");
    CHECK(ok.code == 0);
    const Json j = Json::parse(ok.out);
    CHECK(j["class"] == "ZERO_PI");
    CHECK(j["verified"] == true);
    CHECK(j["args"].size() == 4);

    CHECK(cli("witness -p \"s4\" -t \"1\"").code == 3);
}

TEST_CASE("exit codes and error JSON") {
    const RunResult mismatch = cli_err("witness -p \"[x1,x2]\" -t \"5\"");
    CHECK(mismatch.code == 3);
    const Json m = Json::parse(mismatch.out);
    CHECK(m["error"]["kind"] == "class_mismatch");

    const RunResult syntax = cli_err("classify -p \"x1 +\"");
    CHECK(syntax.code == 2);
    CHECK(Json::parse(syntax.out)["error"]["kind"] == "parse");

    const RunResult usage = cli_err("classify");
    CHECK(usage.code == 2);
    CHECK(Json::parse(usage.out)["error"]["type"] == "Usage");

    CHECK(cli_err("").code == 2);

    const RunResult domain = cli_err("classify -p \"[x1,x2]^2\"");
    CHECK(domain.code == 1);
    CHECK(Json::parse(domain.out)["error"]["type"] == "NotMultilinear");

    const RunResult badlit = cli_err("witness -p \"x1\" -t \"2+\"");
    CHECK(badlit.code == 2);
}

TEST_CASE("arity cap environment override") {
    const RunResult r = run_shell(std::string("env QUATIMAGE_ARITY_CAP=3 \"") +
                                  QUATIMAGE_CLI_PATH +
                                  "\" classify -p \"s4\" 2>&1 1>/dev/null");
    CHECK(r.code == 4);
    CHECK(Json::parse(r.out)["error"]["kind"] == "budget");

    const RunResult bad = run_shell(
        std::string("env QUATIMAGE_ARITY_CAP=banana \"") + QUATIMAGE_CLI_PATH +
        "\" classify -p \"s4\" 2>&1 1>/dev/null");
    CHECK(bad.code == 2);

    const RunResult fine =
        cli_env("QUATIMAGE_ARITY_CAP=4", "classify -p \"s4\"");
    CHECK(fine.code == 0);
}

TEST_CASE("sampler output") {
    const RunResult r =
        cli("sample -p \"[x1,x2]^2\" -n 200 --seed 42 --bound 100");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "R_NONPOS");
    CHECK(j["n"] == 200);
    CHECK(j["seed"] == 42);
    long long total = 0;
    for (const char* key :
         {"zero", "positive_scalar", "negative_scalar", "vector", "mixed"}) {
        total += j["counts"][key].get<long long>();
    }
    CHECK(total == 200);
}

TEST_CASE("weights output with cone check") {
    const RunResult r = cli("weights -p \"[x1,x2]^2\" --check 25");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["has_nonzero_degree"] == true);
    CHECK(j["certificate"]["weights"] == Json::array({"1", "1"}));
    CHECK(j["certificate"]["degree"] == "4");
    CHECK(j["cone_identity"]["holds"] == true);
}

TEST_CASE("phi output") {
    const RunResult r = cli("phi -q \"1+2i+3j+4k\"");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["matrix"][0][0]["re"] == "1");
    CHECK(j["matrix"][0][0]["im"] == "2");
    CHECK(j["matrix"][1][0]["re"] == "-3");
    CHECK(j["trace"]["re"] == "2");
    CHECK(j["det"]["re"] == "30");
    CHECK(j["eigen"]["n_sq"] == "29");
}

TEST_CASE("corpus table and run") {
    const Json table = Json::parse(cli("corpus").out);
    CHECK(table["entries"].size() == 9);
    CHECK(table.contains("results") == false);

    const RunResult r = cli("corpus --run -n 120 --seed 42");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["all_passed"] == true);
    CHECK(j["results"].size() == 9);
}

TEST_CASE("identical invocations are byte-identical") {
    for (const char* args :
         {"classify -p \"[x1,x2][x3,x4]+[x3,x4][x1,x2]\"",
          "sample -p \"x1\" -n 150 --seed 7 --bound 50",
          "witness -p \"x1*x2\" -t \"-2+j-k\"", "corpus"}) {
        const RunResult a = cli(args);
        const RunResult b = cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

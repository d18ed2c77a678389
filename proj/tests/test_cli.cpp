#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + TREEPAT_CLI_PATH + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("trees listing") {
    const RunResult text = run_cli("trees --leaves 4");
    CHECK(text.status == 0);
    CHECK(count_lines(text.out) == 5);
    CHECK(text.out.find("(()(()(()())))") != std::string::npos);

    const RunResult js = run_cli("--format json trees --leaves 4");
    CHECK(js.status == 0);
    const json j = json::parse(js.out);
    CHECK(j["leaves"] == 4);
    CHECK(j["count"] == "5");
    CHECK(j["trees"].size() == 5);

    CHECK(run_cli("trees --leaves 15").status == 3);
}

TEST_CASE("copy counting") {
    const RunResult r = run_cli(
        "count --tree \"(()((()())(()())))\" --pattern \"(L(LL))\"");
    CHECK(r.status == 0);
    CHECK(r.out == "2\n");

    const RunResult idx = run_cli("count --tree 4:1 --pattern \"(L(L(LL)))\"");
    CHECK(idx.status == 0);
    CHECK(idx.out == "1\n");

    const RunResult js = run_cli(
        "--format json count --tree \"(()((()())(()())))\" --pattern "
        "\"(L((LL)L))\"");
    CHECK(js.status == 0);
    const json j = json::parse(js.out);
    CHECK(j["count"] == "1");
    CHECK(j["pattern"] == "(L((LL)L))");
}

TEST_CASE("series") {
    const RunResult r = run_cli("series --pattern \"(L(L(LL)))\" --order 15");
    CHECK(r.status == 0);
    CHECK(r.out.find("avoiders by leaves: 1 1 2 4 9 21 51 127") !=
          std::string::npos);

    const RunResult js = run_cli(
        "--format json series --pattern \"(L(L(LL)))\" --enumerating --order 7");
    CHECK(js.status == 0);
    const json j = json::parse(js.out);
    CHECK(j["kind"] == "enumerating");
    bool has_y = false;
    for (const auto& term : j["terms"]) has_y = has_y || term["y"] > 0;
    CHECK(has_y);
}

TEST_CASE("equation derivation is certified") {
    const RunResult r = run_cli("equation --pattern \"(L(L((LL)L)))\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("verified: true") != std::string::npos);

    const RunResult js =
        run_cli("--format json equation --pattern \"(L(LL))\" --enumerating");
    CHECK(js.status == 0);
    const json j = json::parse(js.out);
    CHECK(j["verified"] == true);
    CHECK(j["equation"].get<std::string>().find('y') != std::string::npos);
}

TEST_CASE("budget override stops long eliminations") {
    const RunResult r =
        run_cli("equation --pattern 7:61 --enumerating", "TREEPAT_CAS_BUDGET_MS=1");
    CHECK(r.status == 3);
}

TEST_CASE("multi-pattern equation") {
    const RunResult r = run_cli(
        "multi-equation --patterns \"((LL)L),(L(LL))\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("x_p2") != std::string::npos);
}

TEST_CASE("classification") {
    const RunResult js = run_cli("--format json classify --leaves 4");
    CHECK(js.status == 0);
    const json j = json::parse(js.out);
    CHECK(j["stable"] == true);
    CHECK(j["classes"].size() == 2);
    CHECK(j["classes"][0]["label"] == "4.1");
    CHECK(j["classes"][0]["members"] == json::array({1, 5}));
    CHECK(j["classes"][1]["size"] == 3);
}

TEST_CASE("bijection verification") {
    const RunResult ok = run_cli(
        "verify-bijection --s 4:2 --t 4:3 --perm 3124 --mode one-rule "
        "--max-leaves 9");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("pass") != std::string::npos);

    const RunResult bad = run_cli(
        "--format json verify-bijection --s 4:1 --t 4:2 --perm 1423 "
        "--mode one-rule --max-leaves 6");
    CHECK(bad.status == 1);
    const json j = json::parse(bad.out);
    CHECK(j["pass"] == false);
    CHECK(j.contains("failure"));
}

TEST_CASE("permutation search") {
    const RunResult r =
        run_cli("search-perms --s 4:2 --t 4:3 --mode one-rule --max-leaves 8");
    CHECK(r.status == 0);
    CHECK(r.out == "3124\n3142\n");
}

TEST_CASE("subword check") {
    const RunResult ok =
        run_cli("dyck-check --pattern 4:5 --word 000 --max-leaves 8");
    CHECK(ok.status == 0);
    const RunResult bad =
        run_cli("dyck-check --pattern 4:3 --word 001 --max-leaves 8");
    CHECK(bad.status == 1);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("trees").status == 2);
    CHECK(run_cli("count --tree \"((\" --pattern L").status == 2);
    CHECK(run_cli("verify-bijection --s 4:2 --t 4:3 --perm 1224 --mode one-rule")
              .status == 2);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("series --help").status == 0);
}

}  // TEST_SUITE

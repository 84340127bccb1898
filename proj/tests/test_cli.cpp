#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

std::string write_input(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("kcr_cli_" + name + ".json");
    std::ofstream(path) << body;
    return path.string();
}

Run run(const std::string& args) {
    const std::string cmd = std::string(KCR_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kCase1 =
    R"({"rank": 3, "colors": [{"kind": "T", "size": 2}, {"kind": "D", "size": 5}, {"kind": "D", "size": 8}],
        "involution": "trivial"})";

const char* kRank6 =
    R"({"colors": [{"kind": "T", "size": 2}, {"kind": "D", "size": 2}, {"kind": "D", "size": 2},
                   {"kind": "D", "size": 2}, {"kind": "D", "size": 2}, {"kind": "D", "size": 2}],
        "involution": "trivial"})";

}  // namespace

TEST_CASE("compute prints the table") {
    const auto r = run("compute --input " + write_input("case1", kCase1));
    CHECK(r.code == 0);
    CHECK(r.out.find("rank-3 case (1)  g=3 h=3 k=1") != std::string::npos);
    CHECK(r.out.find("KO  Z_3    Z_3^2  Z_3    0") != std::string::npos);
}

TEST_CASE("structured output is one JSON document per instance") {
    const auto path = write_input("two", std::string(R"({"specs": [)") + kCase1 + "," + kCase1 + "]}");
    const auto r = run("compute --format structured --input " + path);
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        const auto doc = nlohmann::json::parse(line);
        CHECK(doc["invariants"]["g"] == 3);
        CHECK(doc["invariants"]["case"] == "rank-3 case (1)");
        CHECK(doc["ko"].size() == 8);
        CHECK(doc["ku"][0]["torsion"] == nlohmann::json::parse("[3, 3]"));
        CHECK(doc["resolved"] == true);
        CHECK_FALSE(doc["certificates"].empty());
        ++n;
    }
    CHECK(n == 2);
}

TEST_CASE("g = 1 gives an all-zero table") {
    const auto r = run("compute --input " +
                       write_input("g1", R"({"colors": [{"kind": "T", "size": 2}, {"kind": "D", "size": 2},
                                            {"kind": "D", "size": 3}], "involution": "swap"})"));
    CHECK(r.code == 0);
    CHECK(r.out.find("KO  0   0   0   0   0   0   0   0\n") != std::string::npos);
}

TEST_CASE("unknown convergence") {
    const auto path = write_input("rank6", kRank6);
    auto r = run("compute --max-rank 6 --input " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("status: unknown differential at (r=5") != std::string::npos);
    r = run("compute --max-rank 6 --strict --input " + path);
    CHECK(r.code == 3);
    r = run("compute --input " + path);
    CHECK(r.code == 1);
    CHECK(r.out.find("exceeds --max-rank 4") != std::string::npos);
    CHECK(run("compute --max-rank 7 --input " + path).code == 1);
}

TEST_CASE("verify and sweep") {
    auto r = run("verify --input " + write_input("case1v", kCase1));
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: match") != std::string::npos);
    const auto grid = write_input(
        "grid", R"({"colors": [{"kind": "T", "size": {"min": 2, "max": 6}}, {"kind": "D", "size": {"min": 2, "max": 6}},
                               {"kind": "D", "size": {"min": 2, "max": 6}}], "involution": "trivial"})");
    r = run("sweep --jobs 4 --input " + grid);
    CHECK(r.code == 0);
    CHECK(r.out == "all 125 instances match\n");
    r = run("sweep --format structured --input " + grid);
    CHECK(r.code == 0);
    CHECK(r.out.find(R"({"summary":{"error":0,"instances":125,"match":125,"mismatch":0,"unknown":0}})") !=
          std::string::npos);
}

TEST_CASE("expected") {
    auto r = run("expected --input " + write_input("case1e", kCase1));
    CHECK(r.code == 0);
    CHECK(r.out.find("cuntz: O_4 (g) 2*S^-1 O_4 (g) S^-2 O_4 (g)") != std::string::npos);
    r = run("expected --max-rank 6 --input " + write_input("rank6e", kRank6));
    CHECK(r.code == 1);
    CHECK(r.out.find("no closed form for rank 6") != std::string::npos);
}

TEST_CASE("lemmas") {
    auto r = run("lemmas --arity 2 --min 2 --max 30 --jobs 2");
    CHECK(r.code == 0);
    CHECK(r.out == "arity 2, entries in [2, 30]: 841 tuples, both lemmas hold\n");
    r = run("lemmas --arity 2 --min 1 --max 30");
    CHECK(r.code == 1);
}

TEST_CASE("input errors") {
    auto r = run("compute --input " + write_input("bad", R"({"colors": [{"kind": "Q", "size": 2}], "involution": "trivial"})"));
    CHECK(r.code == 1);
    CHECK(r.out.find("$.colors[0].kind") != std::string::npos);
    r = run("compute --input " + write_input("notjson", "{"));
    CHECK(r.code == 1);
    r = run("compute --input /nonexistent/file.json");
    CHECK(r.code == 1);
    r = run("compute --input " + write_input("alld", R"({"colors": [{"kind": "D", "size": 2}], "involution": "trivial"})"));
    CHECK(r.code == 1);
    CHECK(r.out.find("no off-diagonal") != std::string::npos);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("compute --format xml").code == 1);
}

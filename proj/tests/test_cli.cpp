#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string cli() {
    const char* p = std::getenv("BESSELNORM_CLI");
    REQUIRE_MESSAGE(p != nullptr, "BESSELNORM_CLI must point at the built binary");
    return p;
}

std::string data(const std::string& file) {
    const char* p = std::getenv("BESSELNORM_DATA");
    REQUIRE_MESSAGE(p != nullptr, "BESSELNORM_DATA must point at tests/data");
    return std::string(p) + "/" + file;
}

RunResult run(const std::string& args) {
    RunResult res;
    std::string cmd = cli() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("norm command on the diagonal tensor") {
    RunResult r = run("norm --input " + data("i2_l2.json") + " --which all --json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["bess"]["value"].get<double>() == doctest::Approx(1.0));
    CHECK(j["inj"]["value"].get<double>() == doctest::Approx(1.0));
    CHECK(j["proj"]["value"].get<double>() == doctest::Approx(2.0));
    CHECK(j["hs"]["value"].get<double>() == doctest::Approx(std::sqrt(2.0)));
    CHECK(j["bess"]["certificate"] == "exact");
}

TEST_CASE("norm command on the l1 tensor") {
    RunResult r = run("norm --input " + data("skew_l1.json") + " --which bess --json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["bess"]["value"].get<double>() == doctest::Approx(6.0));
}

TEST_CASE("norm command accepts rank reps") {
    RunResult r = run("norm --input " + data("rep_l2.json") + " --which bess --json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["bess"]["value"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("parse failures exit with code 2") {
    CHECK(run("norm --input " + data("empty.json") + " --which all").code == 2);
    CHECK(run("norm --input " + data("bad.json") + " --which all").code == 2);
    CHECK(run("norm --input /nonexistent.json --which all").code == 2);
    CHECK(run("norm --input " + data("i2_l2.json") + " --which bogus").code == 2);
}

TEST_CASE("verify command") {
    RunResult r = run("verify --suite paper");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    RunResult l = run("verify --suite lattice --seed 99");
    CHECK(l.code == 0);
}

TEST_CASE("environment seed override") {
    RunResult r;
    {
        std::string cmd = "BESSELNORM_SEED=123 " + cli() + " verify --suite lattice";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buf{};
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
        int status = pclose(pipe);
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    CHECK(r.code == 0);
    CHECK(r.out.find("suite ok") != std::string::npos);
}

TEST_CASE("demo is correct and byte-identical across runs") {
    RunResult a = run("demo-nonuniform");
    CHECK(a.code == 0);
    CHECK(a.out.find("UNIFORMITY VIOLATED") != std::string::npos);

    RunResult j1 = run("demo-nonuniform --json");
    RunResult j2 = run("demo-nonuniform --json");
    CHECK(j1.out == j2.out);
    json j = json::parse(j1.out);
    CHECK(j["alpha_u"].get<double>() == doctest::Approx(1.0));
    CHECK(j["alpha_v"].get<double>() == doctest::Approx(2.0));
    CHECK(j["operator_bound"].get<double>() == doctest::Approx(std::sqrt(2.0)));
    CHECK(j["violated"] == true);
}

TEST_CASE("norm json output is deterministic") {
    std::string cmd = "norm --input " + data("i2_l2.json") + " --which all --json";
    CHECK(run(cmd).out == run(cmd).out);
}

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

std::string cli_binary() {
    const char* path = std::getenv("HURWITZ_CLI_BIN");
    REQUIRE(path != nullptr);
    return path;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = cli_binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

}  // namespace

TEST_CASE("coeff subcommand") {
    auto r = run("coeff --mu 2 --nu 1,1 --c 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["F"] == "1/2");
    CHECK(j["nF"] == "1");
    CHECK(j["genus2"] == 0);

    auto r2 = run("coeff --mu 3 --nu 3 --d 2");
    auto j2 = nlohmann::json::parse(r2.output);
    CHECK(j2["F"] == "5/3");
    CHECK(j2["nF"] == "10");
}

TEST_CASE("coeff csv output") {
    auto r = run("--format csv coeff --mu 2 --nu 1,1 --c 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "F,genus2,nF\n1/2,0,1\n");
}

TEST_CASE("paths subcommand") {
    auto r = run("paths --mu 3 --nu 3 --d 2");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output)["count"] == 10);

    auto r2 = run("paths --mu 3 --nu 3 --c 1,1");
    CHECK(nlohmann::json::parse(r2.output)["count"] == 12);
}

TEST_CASE("hurwitz subcommand") {
    auto r = run("hurwitz --profiles \"2;2\"");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output)["H"] == "1/2");
}

TEST_CASE("expand subcommand") {
    auto r = run("expand --l 1 --m 1 --n-max 2 --caps 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["n"] == 1);
    CHECK(j[1]["n"] == 2);
}

TEST_CASE("table subcommand") {
    auto r = run("table --n 3");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 3);
    CHECK(j["partitions"] == std::vector<std::string>{"3", "2,1", "1,1,1"});
}

TEST_CASE("output is byte-stable across runs") {
    auto a = run("coeff --mu 2,1 --nu 2,1 --c 2 --d 1");
    auto b = run("coeff --mu 2,1 --nu 2,1 --c 2 --d 1");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    auto ta = run("table --n 4");
    auto tb = run("table --n 4");
    CHECK(ta.output == tb.output);
}

TEST_CASE("caps refuse with exit code 1") {
    CHECK(run("paths --mu 8 --nu 8").exit_code == 1);
    CHECK(run("--brute-cap 9 paths --mu 8 --nu 8 --d 1").exit_code == 0);
    CHECK(run("table --n 15").exit_code == 1);
    CHECK(run("--table-cap 3 table --n 5").exit_code == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("coeff --mu 1,2 --nu 2,1").exit_code == 2);
    CHECK(run("coeff --mu 2 --nu 3").exit_code == 2);
    CHECK(run("coeff --nu 2").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

// End-to-end checks of the command-line tool: exit codes, output formats,
// cache transparency. Spawns the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>
#include <unistd.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SATAKE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.stdout_text.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path fresh_cache_dir(const char* tag) {
    auto p = std::filesystem::temp_directory_path() /
             (std::string("satake-cli-") + tag + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(p);
    return p;
}

std::string data_file(const char* name) {
    return (std::filesystem::path(SATAKE_DATA_DIR) / name).string();
}

} // namespace

TEST_CASE("verify sp2n: text output, exit 0") {
    RunResult r = run_cli("verify sp2n --n 1 --order 8 --cache-dir " +
                          fresh_cache_dir("v1").string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("identity: sp2n") != std::string::npos);
    CHECK(r.stdout_text.find("passed: true") != std::string::npos);
    CHECK(r.stdout_text.find("chi_power_comparison: matches_chi_squared") != std::string::npos);
}

TEST_CASE("verify sp2n: json output parses against the schema") {
    RunResult r = run_cli("verify sp2n --n 2 --order 10 --format json --cache-dir " +
                          fresh_cache_dir("v2").string());
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j.at("identity_name") == "sp2n");
    CHECK(j.at("n") == 2);
    CHECK(j.at("N") == 10);
    CHECK(j.at("passed") == true);
    CHECK(j.at("first_failure_order").is_null());
    CHECK(j.at("coefficient_diff").is_null());
    CHECK(j.at("chi_power_comparison") == "matches_chi_squared");
    CHECK(j.at("substitution").is_string());
}

TEST_CASE("verify gln and sl2") {
    CHECK(run_cli("verify gln --n 3 --order 8 --cache-dir " + fresh_cache_dir("v3").string())
              .exit_code == 0);
    RunResult r = run_cli("verify sl2 --order 8 --format json --cache-dir " +
                          fresh_cache_dir("v4").string());
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.stdout_text).at("identity_name") == "sl2");
}

TEST_CASE("verify sp2n --paper-claim exits 1 on the literal chi reading") {
    RunResult r = run_cli("verify sp2n --n 1 --order 8 --paper-claim --cache-dir " +
                          fresh_cache_dir("v5").string());
    CHECK(r.exit_code == 1);
    // the identity itself still verified
    CHECK(r.stdout_text.find("passed: true") != std::string::npos);
}

TEST_CASE("character subcommand prints the trace of the Satake matrix") {
    RunResult r = run_cli("character --type B --rank 2 --weight 1,0 --cache-dir " +
                          fresh_cache_dir("c1").string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "a1 + a2 + 1 + a2^-1 + a1^-1\n");

    RunResult j = run_cli("character --type B --rank 2 --weight 2,0 --format json --cache-dir " +
                          fresh_cache_dir("c2").string());
    CHECK(j.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.stdout_text);
    CHECK(parsed.at("dimension") == 14);
    CHECK(parsed.at("serialized").is_string());
}

TEST_CASE("whittaker subcommand") {
    RunResult r = run_cli("whittaker --group sp2n --n 2 --weight 1,0 --cache-dir " +
                          fresh_cache_dir("w1").string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "q^-2 * (a1 + a2 + 1 + a2^-1 + a1^-1)\n");

    RunResult z = run_cli("whittaker --group sp2n --n 2 --weight -1,0 --format json --cache-dir " +
                          fresh_cache_dir("w2").string());
    CHECK(z.exit_code == 0);
    CHECK(nlohmann::json::parse(z.stdout_text).at("is_zero") == true);
}

TEST_CASE("lfactor subcommand") {
    RunResult r = run_cli("lfactor --n 1 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j.at("degree") == 3);
    CHECK(j.at("coefficients")[0] == "1");
    CHECK(j.at("coefficients")[3] == "-1");

    RunResult ab = run_cli("lfactor --abelian 2");
    CHECK(ab.exit_code == 0);
    CHECK(ab.stdout_text.find("-c^2") != std::string::npos);
}

TEST_CASE("euler subcommand on the shipped example") {
    RunResult r = run_cli("euler --input " + data_file("primes-example.json") +
                          " --s 2.0 --tol 1e-10 --format json --cache-dir " +
                          fresh_cache_dir("e1").string());
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j.at("n") == 2);
    CHECK(j.at("primes") == 3);
    CHECK(j.at("abs_err_chi2").get<double>() < 1e-9);
}

TEST_CASE("cache transparency: cold and warm runs emit identical bytes") {
    auto dir = fresh_cache_dir("warm");
    const std::string cmd = "verify sp2n --n 2 --order 8 --format json --cache-dir " + dir.string();
    RunResult cold = run_cli(cmd);
    RunResult warm = run_cli(cmd);
    CHECK(cold.exit_code == 0);
    CHECK(warm.exit_code == 0);
    CHECK(cold.stdout_text == warm.stdout_text);

    RunResult stats = run_cli("cache stats --format json --cache-dir " + dir.string());
    CHECK(stats.exit_code == 0);
    CHECK(nlohmann::json::parse(stats.stdout_text).at("files").get<int>() >= 1);

    RunResult clear = run_cli("cache clear --cache-dir " + dir.string());
    CHECK(clear.exit_code == 0);
    RunResult stats2 = run_cli("cache stats --format json --cache-dir " + dir.string());
    CHECK(nlohmann::json::parse(stats2.stdout_text).at("files") == 0);
}

TEST_CASE("SATAKE_CACHE_DIR environment override") {
    auto dir = fresh_cache_dir("env");
    std::string cmd = "SATAKE_CACHE_DIR=" + dir.string() + " " + SATAKE_CLI_PATH +
                      " verify sp2n --n 1 --order 6 >/dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    RunResult stats = run_cli("cache stats --format json --cache-dir " + dir.string());
    CHECK(nlohmann::json::parse(stats.stdout_text).at("files").get<int>() >= 1);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify sp2n --n 9").exit_code == 2);        // unsupported rank
    CHECK(run_cli("verify sp2n --order -3").exit_code == 2);   // bad order
    CHECK(run_cli("character --type B --rank 2 --weight x,y").exit_code == 2);
    CHECK(run_cli("character --type Q --rank 2 --weight 1,0").exit_code == 2);
    CHECK(run_cli("euler --input /does/not/exist.json --s 2.0").exit_code == 2);
    CHECK(run_cli("lfactor --abelian 5").exit_code == 2);
    // non-dominant character request
    CHECK(run_cli("character --type B --rank 2 --weight 0,1").exit_code == 2);
    // weight length must match the rank
    CHECK(run_cli("character --type B --rank 2 --weight 1,0,0").exit_code == 2);
    CHECK(run_cli("whittaker --group sp2n --n 1 --weight 1,2").exit_code == 2);
}

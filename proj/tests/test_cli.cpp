#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

// Integration tests against the built binary. The test runner exports
// INDPOLY_CLI with its path.

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("INDPOLY_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "INDPOLY_CLI must point at the binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli poly emits the corona quartic") {
    CliResult r = run_cli("poly \"corona(Star(3),K(2))\" --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\t12\t51\t93\t62\n");
}

TEST_CASE("cli classify") {
    CliResult r = run_cli("classify \"C(7)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("well_covered = true") != std::string::npos);
    CHECK(r.out.find("one_well_covered = false") != std::string::npos);

    CliResult j = run_cli("classify \"C(7)\" --format json");
    nlohmann::json rec = nlohmann::json::parse(j.out);
    CHECK(rec["well_covered"] == true);
    CHECK(rec["one_well_covered"] == false);
    CHECK(rec["lambda_star"] == "4/3");
}

TEST_CASE("cli bounds exit codes") {
    CHECK(run_cli("bounds \"C(7)\" --theorem COR2").exit_code == 0);
    CliResult fail = run_cli("bounds \"C(6)\" --theorem COR2 --format json");
    CHECK(fail.exit_code == 1);
    nlohmann::json rep = nlohmann::json::parse(fail.out);
    CHECK(rep["hypotheses_met"] == false);
    CHECK(run_cli("bounds \"corona(C(3),K(2))\" --theorem TH13 --lambda 2")
              .exit_code == 0);
    CHECK(run_cli("bounds \"C(3)\" --theorem CORONA_K2").exit_code == 0);
    CHECK(run_cli("bounds \"C(5)\" --theorem TH99").exit_code == 2);
}

TEST_CASE("cli corona formula and enumeration agree") {
    CliResult r = run_cli("corona \"C(3)\" \"K(2)\" --via-formula --via-enum --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["equal"] == true);
    CHECK(j["via_formula"] == j["via_enum"]);
    CHECK(j["via_enum"] == nlohmann::json::array({"1", "9", "24", "20"}));

    CliResult built = run_cli("corona \"C(3)\" \"K(2)\" --format json");
    nlohmann::json g = nlohmann::json::parse(built.out);
    CHECK(g["n"] == 9);
}

TEST_CASE("cli oracle and roots") {
    CHECK(run_cli("oracle \"P(4)\" --format tsv").out == "1\t4\t3\n");
    CliResult r = run_cli("roots \"corona(Star(3),K(2))\" --format json");
    nlohmann::json census = nlohmann::json::parse(r.out);
    CHECK(census["real_rooted"] == false);
    CliResult c = run_cli("roots --coeffs 1,3,1 --format json");
    CHECK(nlohmann::json::parse(c.out)["real_rooted"] == true);
}

TEST_CASE("cli window") {
    CliResult r = run_cli("window --alpha 5 --n 12 --kind WELL_COVERED --format json");
    nlohmann::json w = nlohmann::json::parse(r.out);
    CHECK(w["lo"] == 3);
    CHECK(w["hi"] == 4);
}

TEST_CASE("cli graph argument forms") {
    CHECK(run_cli("poly g6:DqK --format tsv").out == "1\t5\t5\n");
    CHECK(run_cli("classify g6:DqK").exit_code == 0);
}

TEST_CASE("cli size limit environment variable") {
    const char* bin = std::getenv("INDPOLY_CLI");
    REQUIRE(bin != nullptr);
    auto with_env = [&](const std::string& env, const std::string& args) {
        std::string cmd = env + " " + std::string(bin) + " " + args +
                          " >/dev/null 2>&1";
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    // default lambda* guard is 24
    CHECK(with_env("", "classify \"Empty(25)\"") == 2);
    CHECK(with_env("INDPOLY_SIZE_LIMIT=26", "classify \"Empty(25)\"") == 0);
    CHECK(with_env("INDPOLY_SIZE_LIMIT=10", "classify \"Empty(12)\"") == 2);
}

TEST_CASE("cli error paths exit 2") {
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
    CHECK(run_cli("poly \"C(2)\"").exit_code == 2);
    CHECK(run_cli("poly \"garbage(\"").exit_code == 2);
    CHECK(run_cli("oracle \"Empty(30)\"").exit_code == 2);  // oracle limit
    CHECK(run_cli("poly").exit_code == 2);              // missing argument
    CHECK(run_cli("window --alpha 0 --n 5").exit_code == 2);
}

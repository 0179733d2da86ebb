#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ZECKORBIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("encode and window") {
    CHECK(trimmed(run_cli("encode 16").output) == "100100");
    CHECK(trimmed(run_cli("window 8 --M 5").output) == "00001");
}

TEST_CASE("decode inverts encode") {
    for (int n : {1, 2, 12, 987, 4181, 9999}) {
        const std::string w = trimmed(run_cli("encode " + std::to_string(n)).output);
        CHECK(trimmed(run_cli("decode " + w).output) == std::to_string(n));
    }
}

TEST_CASE("mul matches both paths") {
    CHECK(trimmed(run_cli("mul 8 --q 2").output) == "100100");
    CHECK(trimmed(run_cli("mul 8 --q 2 --stream").output) == "100100");
}

TEST_CASE("avoid") {
    CHECK(trimmed(run_cli("avoid 00101 --family 101").output) == "no");
    CHECK(trimmed(run_cli("avoid 1#1 --family 11").output) == "yes");
}

TEST_CASE("domain errors exit 1") {
    CHECK(run_cli("encode 0").exit_code == 1);
    CHECK(run_cli("decode 011").exit_code == 1);
}

TEST_CASE("orbit json output is deterministic") {
    const std::string args = "orbit --u 1 --q 2 --M 5 --family 101 --n-max 40 --format json";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"finiteness_verdict\": \"undetermined\"") != std::string::npos);
}

TEST_CASE("export-dot produces graphs") {
    const auto dfa = run_cli("export-dot dfa --family 101");
    CHECK(dfa.exit_code == 0);
    CHECK(dfa.output.find("digraph") != std::string::npos);
    const auto orbit = run_cli("export-dot orbit --u 1 --q 2 --M 5 --family 101 --n-max 20");
    CHECK(orbit.exit_code == 0);
    CHECK(orbit.output.find("digraph orbit") != std::string::npos);
}

TEST_CASE("check-locality reports the failing width") {
    CHECK(trimmed(run_cli("check-locality --q 2 --M 1 --n-cap 10 --d-max 0").output) ==
          "not-found");
}

TEST_CASE("verify-paper flags the known inconsistency and exits 2") {
    const auto r = run_cli("verify-paper example-3");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("MISMATCH table1_row_4") != std::string::npos);
    CHECK(r.output.find("match    table1_row_3") != std::string::npos);
}

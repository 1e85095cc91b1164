#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "sumrank/gf_tower.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(SUMRANK_CLI_PATH) + " " + args + " 2>/tmp/cli_err.txt";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string read_stderr() {
    std::ifstream in("/tmp/cli_err.txt");
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

}  // namespace

TEST_CASE("tower subcommand prints the canonical text form") {
    auto res = run("tower --s 4 --m 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "p=2,e=1,m=2,s=4,ell=15,modulus=100011011\n");
}

TEST_CASE("table preset output is byte-stable and matches the published rows") {
    auto res = run("table --preset appendix --s 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "delta,b,singleton,eq33,delsarte,exact_dim,beats_delsarte\n"
          "2,0,1,1,1,,false\n"
          "2,1,1,1,1,,false\n");

    auto row = run("table --s 2 --delta 3 --b 0");
    CHECK(row.out ==
          "delta,b,singleton,eq33,delsarte,exact_dim,beats_delsarte\n"
          "3,0,4,2,2,,false\n");

    auto twice = run("table --preset appendix --s 4 --jobs 3");
    CHECK(twice.out == run("table --preset appendix --s 4").out);

    auto s4 = run("table --preset appendix --s 4");
    CHECK(s4.out.find("5,1,26,18,14,,true\n") != std::string::npos);
    // 24 data rows
    CHECK(std::count(s4.out.begin(), s4.out.end(), '\n') == 25);
}

TEST_CASE("invalid parameters exit 2 with a JSON error on stderr") {
    auto res = run("table --s 2 --ell 5");
    CHECK(res.exit_code == 2);
    std::string err = read_stderr();
    CHECK(err.find("\"error\"") != std::string::npos);
    CHECK(err.find("EllNotDividingQMinus1") != std::string::npos);

    auto res2 = run("construct --s 2 --ell 3 --delta 99");
    CHECK(res2.exit_code == 2);
}

TEST_CASE("construct, encode, decode, mindist round trip") {
    auto cons = run("construct --s 2 --ell 3 --delta 3 --b 1 -o /tmp/cli_code.json");
    REQUIRE(cons.exit_code == 0);

    sumrank::Tower tw = sumrank::Tower::build(2, 1, 2, 2, 3);
    const auto& fe = tw.subfield_elements(tw.deg_f());
    std::string msg = tw.elem_to_text(fe[1]) + "," + tw.elem_to_text(fe[3]);

    auto enc = run("encode --code /tmp/cli_code.json --message " + msg);
    REQUIRE(enc.exit_code == 0);
    std::string word = enc.out.substr(0, enc.out.size() - 1);

    auto dec = run("decode --code /tmp/cli_code.json --word " + word);
    REQUIRE(dec.exit_code == 0);
    CHECK(dec.out.find("\"error_weight\": 0") != std::string::npos);

    // corrupt one coordinate with an F element and decode back
    std::string corrupted = word;
    corrupted.replace(0, tw.big_degree(), tw.elem_to_text(fe[2]));
    if (corrupted == word) corrupted.replace(0, tw.big_degree(), tw.elem_to_text(fe[1]));
    auto dec2 = run("decode --code /tmp/cli_code.json --word " + corrupted);
    REQUIRE(dec2.exit_code == 0);
    CHECK(dec2.out.find(word.substr(tw.big_degree())) != std::string::npos);

    auto md = run("mindist --code /tmp/cli_code.json");
    CHECK(md.exit_code == 0);
    CHECK(std::stoul(md.out) >= 3);

    // zero message encodes to the zero codeword
    auto zero = run("encode --code /tmp/cli_code.json --message 0000,0000");
    std::string zeros;
    for (int i = 0; i < 6; ++i) zeros += (i ? ",0000" : "0000");
    CHECK(zero.out == zeros + "\n");
}

TEST_CASE("construct output is byte-stable across runs") {
    auto a = run("construct --s 3 --ell 7 --delta 5 --b 1");
    auto b = run("construct --s 3 --ell 7 --delta 5 --b 1");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"dim\": 5") != std::string::npos);
}

TEST_CASE("budget env var forces BudgetExceeded exit code") {
    auto res = run("mindist --code /tmp/cli_code.json", "SUMRANK_BUDGET=3");
    CHECK(res.exit_code == 3);
    CHECK(read_stderr().find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("verify subcommand runs the property suite") {
    auto res = run("verify --s 2 --ell 3 --cases 20");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("[PASS] csc_iff_left_ideal") != std::string::npos);
    CHECK(res.out.find("[PASS] product_rule") != std::string::npos);
    CHECK(res.out.find("[FAIL]") == std::string::npos);
}

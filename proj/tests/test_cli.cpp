#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const char* name) {
    return read_file(std::string(RSEQ_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("appendix golden output") {
    const RunResult lam = run_cli("sequence --var lambda --m-min -5 --m-max 6");
    CHECK(lam.exit_code == 0);
    CHECK(lam.out == golden("appendix1.txt"));

    const RunResult zet = run_cli("sequence --var zeta --m-min -5 --m-max 6");
    CHECK(zet.exit_code == 0);
    CHECK(zet.out == golden("appendix2.txt"));
}

TEST_CASE("sequence structured formats") {
    const RunResult js = run_cli("sequence --var lambda --m-min 0 --m-max 0 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.out ==
          "{\"m\":0,\"variable\":\"lambda\",\"numerator_coeffs\":[\"0\",\"1\"],"
          "\"base\":\"1-lambda\",\"power\":1}\n");

    const RunResult cs = run_cli("sequence --var lambda --m-min -3 --m-max -3 --format csv");
    CHECK(cs.exit_code == 0);
    CHECK(cs.out == "m,variable,numerator_coeffs,base,power\n-3,lambda,0;1;8;6,1-lambda,7\n");
}

TEST_CASE("byte determinism") {
    const RunResult a = run_cli("sequence --var zeta --m-min -5 --m-max 6");
    const RunResult b = run_cli("sequence --var zeta --m-min -5 --m-max 6");
    CHECK(a.out == b.out);
    const RunResult c = run_cli("table --triangle h --max-m 8 --format csv");
    const RunResult d = run_cli("table --triangle h --max-m 8 --format csv");
    CHECK(c.out == d.out);
}

TEST_CASE("triangle tables") {
    const RunResult eul = run_cli("table --triangle eulerian2 --max-m 5");
    CHECK(eul.exit_code == 0);
    CHECK(eul.out == "1\n1 2\n1 8 6\n1 22 58 24\n1 52 328 444 120\n");

    const RunResult g = run_cli("table --triangle g --max-m 6 --format csv");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("6,4,415/3456\n") != std::string::npos);
    CHECK(g.out.rfind("m,k,value\n", 0) == 0);

    const RunResult n3 = run_cli("table --triangle N --max-m 3");
    CHECK(n3.exit_code == 0);
    CHECK(n3.out == "1\n1 1\n1 3 1\n");

    const RunResult js = run_cli("table --triangle stirling2assoc --max-m 4 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.out == "[\"0\"]\n[\"0\",\"1\"]\n[\"0\",\"1\"]\n[\"0\",\"1\",\"3\"]\n");
}

TEST_CASE("verify suites pass at small depth") {
    const RunResult all = run_cli("verify --suite all --depth 4");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("RESULT PASS all depth=4") != std::string::npos);
    CHECK(all.out.find("FAIL") == std::string::npos);

    const RunResult ident = run_cli("verify --suite identities --depth 1");
    CHECK(ident.exit_code == 0);
}

TEST_CASE("oracle command") {
    const RunResult r = run_cli("oracle --m-min -2 --m-max 2 --order 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS lambda-zeta-relation order=6") != std::string::npos);
    CHECK(r.out.find("PASS closed-form m=-2 order=6") != std::string::npos);
    CHECK(r.out.find("RESULT PASS oracle") != std::string::npos);
}

TEST_CASE("asym command") {
    const RunResult fit = run_cli("asym --k 2 --m-max 40");
    CHECK(fit.exit_code == 0);
    CHECK(fit.out.find("fit (ascending powers of m): -2 1") != std::string::npos);

    const RunResult js = run_cli("asym --k 3 --m-max 60 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"monomial_coeffs\":[\"7\",\"-5\",\"1\"]") != std::string::npos);

    const RunResult k1 = run_cli("asym --k 1 --m-max 40");
    CHECK(k1.exit_code == 2);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("sequence --var sigma --m-min 0 --m-max 1").exit_code == 2);
    CHECK(run_cli("sequence --var lambda --m-min 3 --m-max 1").exit_code == 2);
    CHECK(run_cli("sequence --var lambda --m-min -90 --m-max 0").exit_code == 2);
    CHECK(run_cli("table --triangle nope --max-m 3").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "wact/report.hpp"

using namespace wact;

namespace {
const FieldSpec Q = FieldSpec::rationals();

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "wact_cli_out.txt";
    std::string cmd = std::string(WACT_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::ostringstream ss;
    ss << in.rdbuf();
    return RunResult{WEXITSTATUS(status), ss.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}
}  // namespace

TEST_CASE("machine records round-trip exactly") {
    Report rep;
    rep.add("rank", std::size_t(6));
    rep.add("accessible", true);
    Vec v = {Scalar(Q, 1, 2), Scalar(Q, -7), Scalar(Q, 22, 7)};
    rep.add("values", scalar_list(v));
    ExactMatrix m(2, 2, Q);
    m.at(0, 1) = Scalar(Q, -3, 4);
    add_matrix(rep, "m", m);

    auto parsed = Report::parse_machine(rep.machine_text());
    REQUIRE(parsed.size() == rep.records.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == rep.records[i]);

    for (const auto& [k, val] : parsed)
        if (k == "values") CHECK(parse_scalar_list(Q, val) == v);
}

TEST_CASE("scalar text forms parse back to identical values") {
    FieldSpec f7 = FieldSpec::prime(7);
    for (const Scalar& s : {Scalar(Q, 0), Scalar(Q, -5), Scalar(Q, 3, 8), Scalar(Q, -22, 6)})
        CHECK(Scalar::parse(Q, s.str()) == s);
    for (int k = 0; k < 7; ++k) {
        Scalar s(f7, k);
        CHECK(Scalar::parse(f7, s.str()) == s);
    }
}

TEST_CASE("cli exit codes: success, mathematical negative, input error") {
    CHECK(run_cli("accessibility --variety leibniz").exit_code == 0);
    CHECK(run_cli("structure-check --variety leibniz --params 1,0,0,0").exit_code == 0);
    CHECK(run_cli("structure-check --variety leibniz --params 0,0,0,0").exit_code == 1);
    CHECK(run_cli("closure-check --variety novikov").exit_code == 1);
    CHECK(run_cli("check-variety --variety lie --algebra mat2").exit_code == 1);
    CHECK(run_cli("accessibility --variety nosuchvariety").exit_code == 2);
    CHECK(run_cli("actor --variety alt --algebra octonions --field F2").exit_code == 2);  // char excluded

    auto bad = write_temp("bad.var", "variety broken\nidentity (x*x)\n");
    CHECK(run_cli("accessibility --variety " + bad.string()).exit_code == 2);
}

TEST_CASE("cli reports are byte-identical across runs") {
    for (const char* cmd : {"accessibility --variety leibniz --machine",
                            "actor --variety assoc --algebra mat2 --machine",
                            "bracket-family --variety symmetric_leibniz --machine"}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
}

TEST_CASE("cli machine output re-parses with exact values") {
    RunResult r = run_cli("accessibility --variety leibniz --machine");
    REQUIRE(r.exit_code == 0);
    auto records = Report::parse_machine(r.output);
    bool saw_lambda = false;
    for (const auto& [k, v] : records) {
        if (k == "lambda") {
            saw_lambda = true;
            Vec lam = parse_scalar_list(Q, v);
            REQUIRE(lam.size() == 8);
            CHECK(lam[0] == Scalar(Q, 1));
            CHECK(lam[4] == Scalar(Q, -1));
        }
        if (k == "rank") CHECK(v == "6");
    }
    CHECK(saw_lambda);
}

TEST_CASE("cli reads variety, algebra and action files") {
    auto var = write_temp("leib.var",
                          "variety my_leibniz\n"
                          "char any\n"
                          "identity ((x*y)*z) - ((x*z)*y) - (x*(y*z))\n");
    RunResult r = run_cli("accessibility --variety " + var.string() + " --machine");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("variety=my_leibniz") != std::string::npos);
    CHECK(r.output.find("rank=6") != std::string::npos);

    auto alg = write_temp("pad.alg",
                          "algebra pad3 over Q dim 3\n"
                          "basis a b c\n"
                          "a * b = c\n"
                          "b * a = - c\n");
    RunResult r2 = run_cli("check-variety --variety nil2_acom --algebra " + alg.string());
    CHECK(r2.exit_code == 0);

    auto act = write_temp("pad.act",
                          "action glue of abelian1 on pad3\n"
                          "b:e1 * x:a = c\n"
                          "x:a * b:e1 = - c\n");
    RunResult r3 = run_cli("verify-action --action " + act.string() + " --B abelian1 --X " + alg.string() +
                           " --variety nil2_acom");
    CHECK(r3.exit_code == 0);
    RunResult r4 = run_cli("tau --action " + act.string() + " --B abelian1 --X " + alg.string() +
                           " --variety nil2_acom --machine");
    CHECK(r4.exit_code == 0);
    CHECK(r4.output.find("images=1") != std::string::npos);

    // the semidirect product round-trips through the algebra grammar
    auto outp = std::filesystem::temp_directory_path() / "semi.alg";
    RunResult r5 = run_cli("semidirect --action " + act.string() + " --B abelian1 --X " + alg.string() +
                           " --variety nil2_acom --out " + outp.string());
    CHECK(r5.exit_code == 0);
    std::ifstream in(outp);
    std::ostringstream ss;
    ss << in.rdbuf();
    Algebra semi = parse_algebra(ss.str());
    CHECK(semi.dim() == 4);
    CHECK(satisfies_all(semi, builtin_variety("nil2_acom", Q)));
}

TEST_CASE("cli rule overrides select a bracket variant") {
    // biderivation variant: x(yz) = (xy)z - (xz)y, (yz)x = (yx)z - y(xz)
    RunResult good = run_cli(
        "actor --variety leibniz --algebra heisenberg3 "
        "--lambda 1,0,0,0,-1,0,0,0 --mu 0,1,0,0,0,0,-1,0 --machine");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("total=true") != std::string::npos);
    CHECK(good.output.find("satisfies_variety=true") != std::string::npos);
    // rules that are not identities of the variety are rejected as input
    RunResult bad = run_cli(
        "actor --variety leibniz --algebra heisenberg3 "
        "--lambda 1,1,1,1,1,1,1,1 --mu 0,0,0,0,0,0,0,0");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("fixtures lists the catalog") {
    RunResult r = run_cli("fixtures");
    CHECK(r.exit_code == 0);
    for (const char* name : {"leibniz", "novikov", "cpoisson", "alt", "nil2_acom", "octonions", "jj2_f3"})
        CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("paper-suite runs green end to end") {
    RunResult r = run_cli("paper-suite");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("PASS   1") != std::string::npos);
    CHECK(r.output.find("PASS  15") != std::string::npos);
}

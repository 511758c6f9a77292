#include "algdct/codegen.hpp"

#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ALGDCT_CLI_PATH
#error "ALGDCT_CLI_PATH must point at the built command-line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

std::filesystem::path temp_file(const std::string& tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("algdct_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" +
            tag);
}

RunResult run_cli(const std::string& args) {
    const std::filesystem::path out = temp_file("out.txt");
    const std::string cmd =
        std::string("\"") + ALGDCT_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult res;
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::ostringstream text;
    text << in.rdbuf();
    res.output = text.str();
    std::filesystem::remove(out);
    return res;
}

} // namespace

TEST_CASE("plan subcommand prints the factorization", "[cli]") {
    const RunResult r = run_cli("plan dct4_poly 8 --skew 1/2");
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("transform: dct4_poly") != std::string::npos);
    CHECK(r.output.find("skew: 1/2") != std::string::npos);
    CHECK(r.output.find("operations: 12 multiplications, 36 additions") != std::string::npos);
    CHECK(r.output.find("add_scale_block") != std::string::npos);
    CHECK(r.output.find("recursion:") != std::string::npos);
    CHECK(r.output.find("skew=1/4") != std::string::npos);  // child node

    CHECK(run_cli("plan dct2_poly 16 --depth 1").exit_code == 0);
}

TEST_CASE("count subcommand checks the closed form", "[cli]") {
    const RunResult r = run_cli("count dct2 1024");
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(match)") != std::string::npos);
}

TEST_CASE("verify subcommand exits zero on success", "[cli]") {
    const RunResult rf = run_cli("verify dct4 64");
    INFO(rf.output);
    CHECK(rf.exit_code == 0);
    CHECK(rf.output.find("PASS") != std::string::npos);

    const RunResult re = run_cli("verify dct2 32 --exact");
    INFO(re.output);
    CHECK(re.exit_code == 0);
    CHECK(re.output.find("PASS (exact") != std::string::npos);

    const RunResult rs = run_cli("verify dct4_poly 16 --skew 3/8 --exact");
    INFO(rs.output);
    CHECK(rs.exit_code == 0);
}

TEST_CASE("verify subcommand exits two on mismatch", "[cli]") {
    using namespace algdct;
    TransformPlan p = plan_dct4_poly(4, Dyadic(1, 1));
    std::swap(p.stages.back().perm[0], p.stages.back().perm[1]);
    const std::filesystem::path f = temp_file("bad_plan.json");
    {
        std::ofstream out(f);
        out << plan_to_json(p).dump(2) << "\n";
    }
    const RunResult r = run_cli("verify --plan \"" + f.string() + "\" --exact");
    std::filesystem::remove(f);
    INFO(r.output);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("apply subcommand computes vectors", "[cli]") {
    const RunResult re = run_cli("apply dct2 4 --input 1,1,1,1 --exact");
    INFO(re.output);
    CHECK(re.exit_code == 0);
    CHECK(re.output.find("y0 = (4)  level 0") != std::string::npos);
    CHECK(re.output.find("~ 0\n") != std::string::npos);  // the other rows vanish

    const RunResult rf = run_cli("apply dct4_poly 4 --unit 0");
    INFO(rf.output);
    CHECK(rf.exit_code == 0);
    CHECK(rf.output.find("y3 = ") != std::string::npos);

    CHECK(run_cli("apply dct2 4 --input 1,2").exit_code == 1);
    CHECK(run_cli("apply dct2 4").exit_code == 1);
}

TEST_CASE("factor subcommand walks the tower", "[cli]") {
    const RunResult r = run_cli("factor 3 --check");
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("depth 0") != std::string::npos);
    CHECK(r.output.find("depth 3") != std::string::npos);
    CHECK(r.output.find("over Q(") != std::string::npos);
    CHECK(r.output.find("verified exactly") != std::string::npos);

    const RunResult rs = run_cli("factor 2 --skew 3/8 --check");
    INFO(rs.output);
    CHECK(rs.exit_code == 0);
    CHECK(rs.output.find("verified exactly") != std::string::npos);
}

TEST_CASE("galois subcommand prints group data", "[cli]") {
    const RunResult r = run_cli("galois 2");
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("degree 4") != std::string::npos);
    CHECK(r.output.find("s1: theta ->") != std::string::npos);
    CHECK(r.output.find("Cayley table") != std::string::npos);
    CHECK(r.output.find("subgroup chain") != std::string::npos);
    CHECK(r.output.find("fixes  Q") != std::string::npos);
}

TEST_CASE("emit subcommand produces kernels graphs and json", "[cli]") {
    const RunResult rk = run_cli("emit dct4_poly 4 --format kernel");
    INFO(rk.output);
    CHECK(rk.exit_code == 0);
    CHECK(rk.output.find("const double c0") != std::string::npos);
    CHECK(rk.output.find("y0 = ") != std::string::npos);

    const RunResult rg = run_cli("emit dct4 8 --format graph");
    CHECK(rg.exit_code == 0);
    CHECK(rg.output.find("digraph") != std::string::npos);

    CHECK(run_cli("emit dct4 8 --format yaml").exit_code == 1);
}

TEST_CASE("json output is deterministic and shared across subcommands", "[cli]") {
    const RunResult a = run_cli("plan dct4 16 --json -");
    const RunResult b = run_cli("plan dct4 16 --json -");
    const RunResult c = run_cli("emit dct4 16 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
    CHECK(a.output.find("\"transform\": \"dct4\"") != std::string::npos);

    // A saved plan file round-trips through verify.
    const std::filesystem::path f = temp_file("plan.json");
    CHECK(run_cli("plan dct2 16 --json \"" + f.string() + "\"").exit_code == 0);
    const RunResult rv = run_cli("verify --plan \"" + f.string() + "\"");
    INFO(rv.output);
    CHECK(rv.exit_code == 0);
    std::filesystem::remove(f);
}

TEST_CASE("usage errors exit one", "[cli]") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("bogus").exit_code == 1);
    CHECK(run_cli("verify dct4").exit_code == 1);
    CHECK(run_cli("factor").exit_code == 1);
    CHECK(run_cli("plan dct9 8").exit_code == 1);
    CHECK(run_cli("plan dct2 8 --skew 1/4").exit_code == 1);
    CHECK(run_cli("plan dct4_poly 12").exit_code == 1);
    CHECK(run_cli("verify --plan /nonexistent.json").exit_code == 1);
}

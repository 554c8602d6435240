#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the CLI under test (path in LIECP_BIN) through the shell, capturing
// stdout/stderr and the exit code. env_prefix lets tests export variables
// for one invocation, e.g. "LIECP_DIM_CAP=10".
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const char* bin = std::getenv("LIECP_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "LIECP_BIN must point at the CLI binary");
    const std::string base =
        "/tmp/liecp_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
    std::string cmd = env_prefix.empty() ? "" : env_prefix + " ";
    cmd += std::string("\"") + bin + "\" " + args + " > " + base + ".out 2> " + base + ".err";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    std::remove((base + ".out").c_str());
    std::remove((base + ".err").c_str());
    return r;
}

std::string write_temp_json(const std::string& content) {
    static int counter = 0;
    const std::string path =
        "/tmp/liecp_in_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + ".json";
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("product emits the Clebsch-Gordan decomposition as canonical JSON") {
    const RunResult r = run_cli("product --type A --rank 1 --left 1 --right 1");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["type"] == "A1");
    CHECK(j["dim"] == "4");
    REQUIRE(j["charpoly"].size() == 2);
    CHECK(j["charpoly"][0]["highest"] == Json::array({0}));
    CHECK(j["charpoly"][0]["mult"] == 1);
    CHECK(j["charpoly"][1]["highest"] == Json::array({2}));
}

TEST_CASE("rootsys dumps a parseable root system") {
    const RunResult r = run_cli("rootsys --type G --rank 2");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["family"] == "G");
    CHECK(j["positive_roots"].size() == 6);
    CHECK(j["cartan_matrix"].size() == 2);
}

TEST_CASE("borel prints the pinned rank line") {
    const RunResult r = run_cli("borel --type G --rank 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "positive_roots = 6\ncartan_dim = 2\nrank(lambda_B) = 2 = dim h : PASS\n");

    const RunResult dump = run_cli("borel --type A --rank 1 --dump-matrix");
    REQUIRE(dump.exit_code == 0);
    const Json j = Json::parse(dump.out);
    CHECK(j["pass"] == true);
    CHECK(j["matrix"] == Json::parse(R"([["0","0"],["2","0"]])"));
}

TEST_CASE("sl2-embed reports the factored polynomial") {
    const RunResult r = run_cli("sl2-embed --type C --rank 3 --class long");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["charpoly"] ==
          "z0^11 * (z0^2 - 1*(z1^2+z2*z3))^4 * (z0^2 - 4*(z1^2+z2*z3))^1");
    CHECK(j["k0_total"] == 11);
}

TEST_CASE("verification subcommands succeed and are deterministic") {
    const RunResult r = run_cli("verify-sl2 --m 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("PASS\n") != std::string::npos);

    const RunResult bc = run_cli("verify-basechange --m 2 --seed 7 --count 5");
    REQUIRE(bc.exit_code == 0);
    CHECK(bc.out.find("5/5") != std::string::npos);
    CHECK(run_cli("verify-basechange --m 2 --seed 7 --count 5").out == bc.out);
}

TEST_CASE("identical invocations are byte-identical and match the golden audit") {
    const RunResult a = run_cli("sl2-table --json");
    const RunResult b = run_cli("sl2-table --json");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    const char* golden = std::getenv("LIECP_GOLDEN");
    REQUIRE_MESSAGE(golden != nullptr, "LIECP_GOLDEN must point at the frozen audit");
    CHECK(a.out == slurp(golden));

    const RunResult md = run_cli("sl2-table --markdown");
    REQUIRE(md.exit_code == 0);
    CHECK(md.out.rfind("| row |", 0) == 0);
}

TEST_CASE("decompose reads a factor file and inverts it") {
    const std::string path = write_temp_json(
        R"([{"coords":[2],"mult":1},{"coords":[0],"mult":2},{"coords":[-2],"mult":1}])");
    const RunResult r = run_cli("decompose --type A --rank 1 --input " + path);
    std::remove(path.c_str());
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j["charpoly"].size() == 2);
    CHECK(j["charpoly"][0]["highest"] == Json::array({0}));
    CHECK(j["charpoly"][1]["highest"] == Json::array({2}));
}

TEST_CASE("domain errors exit with code 1 and a diagnostic") {
    const std::string path = write_temp_json(R"([{"coords":[1],"mult":1}])");
    const RunResult r = run_cli("decompose --type A --rank 1 --input " + path);
    std::remove(path.c_str());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("error:") == 0);

    const RunResult unsupported = run_cli("rootsys --type D --rank 2");
    CHECK(unsupported.exit_code == 1);
    CHECK(unsupported.err.find("error:") == 0);

    const RunResult missing = run_cli("decompose --type A --rank 1 --input /nonexistent.json");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("rootsys --type A").exit_code == 2);          // missing --rank
    CHECK(run_cli("sl2-embed --type C --rank 3 --class x").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                          // a subcommand is required
    CHECK(run_cli("sl2-table --json --markdown").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("the dimension guard is controlled by flag and environment") {
    // dim V(100) = 101 passes by default
    CHECK(run_cli("linearize --type A --rank 1 --weight 100").exit_code == 0);

    const RunResult capped =
        run_cli("linearize --type A --rank 1 --weight 100", "LIECP_DIM_CAP=10");
    CHECK(capped.exit_code == 1);
    CHECK(capped.err.find("error:") == 0);

    // the explicit flag wins over the environment
    CHECK(run_cli("linearize --type A --rank 1 --weight 100 --dim-cap 1000",
                  "LIECP_DIM_CAP=10")
              .exit_code == 0);

    const RunResult bad_env =
        run_cli("linearize --type A --rank 1 --weight 2", "LIECP_DIM_CAP=zebra");
    CHECK(bad_env.exit_code == 1);

    // charpoly honors the same guard even though it never expands weights
    CHECK(run_cli("charpoly --type A --rank 1 --weight 100").exit_code == 0);
    const RunResult charpoly_flag =
        run_cli("charpoly --type A --rank 1 --weight 100 --dim-cap 50");
    CHECK(charpoly_flag.exit_code == 1);
    CHECK(charpoly_flag.err.find("error:") == 0);
    CHECK(run_cli("charpoly --type A --rank 1 --weight 100", "LIECP_DIM_CAP=50").exit_code ==
          1);
}

TEST_CASE("weights with multiplicity suffixes") {
    const RunResult r = run_cli("charpoly --type A --rank 2 --weight 1,1:2 --weight 0,0");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["dim"] == "17");  // 2 x 8 + 1

    CHECK(run_cli("charpoly --type A --rank 2 --weight 1").exit_code == 1);
    CHECK(run_cli("charpoly --type A --rank 2 --weight 1,x").exit_code == 1);
    CHECK(run_cli("charpoly --type A --rank 2 --weight 1,1:0").exit_code == 1);
    CHECK(run_cli("charpoly --type A --rank 2 --weight=-1,0").exit_code == 1);  // not dominant
}

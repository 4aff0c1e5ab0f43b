#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehall/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string tmp = std::string(EHALL_CLI_PATH) + ".out.tmp";
    std::string cmd = std::string(EHALL_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(tmp.c_str());
    return {WEXITSTATUS(rc), buf.str()};
}

// the wall-time line is the one permitted difference between reruns
std::string strip_wall(const std::string& doc) {
    return std::regex_replace(doc, std::regex("\"wall_ms\": [0-9.e+-]+|# wall_ms=[0-9.e+-]+"),
                              "WALL");
}

int count(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t p = hay.find(needle); p != std::string::npos;
         p = hay.find(needle, p + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("check-cubic full range") {
    RunResult r = run("check-cubic --m -5..5");
    CHECK(r.exit_code == 0);
    CHECK(count(r.out, "\"check_id\": \"CUBIC(") == 11);
    CHECK(count(r.out, "\"status\": \"PASS\"") == 11);
    CHECK(count(r.out, "FAIL") == 0);
}

TEST_CASE("rank example") {
    RunResult r = run("rank --bidegree 2,1 --window -1..2,n=2 --prime 2147483647 --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("quotient_rank=3") != std::string::npos);
    CHECK(r.out.find("n_words=4") != std::string::npos);
}

TEST_CASE("deterministic payloads") {
    const char* cmds[] = {
        "relators --window u=-2..2,th=2,n=2",
        "rank --bidegree 2,0..2 --window -1..2,n=2",
        "lemma-tensor --trials 5 --max-dim 4",
    };
    for (const char* c : cmds) {
        RunResult a = run(c);
        RunResult b = run(c);
        CHECK(a.exit_code == b.exit_code);
        CHECK(strip_wall(a.out) == strip_wall(b.out));
        CHECK(a.out.find("\"wall_ms\"") != std::string::npos);
    }
    RunResult c1 = run("relators --window u=-1..1,th=1,n=1 --format csv");
    RunResult c2 = run("relators --window u=-1..1,th=1,n=1 --format csv");
    CHECK(strip_wall(c1.out) == strip_wall(c2.out));
    CHECK(c1.out.find("check_id,family,params,bidegree,prime,seed,status,data,elapsed_ms") !=
          std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("check-cubic --m 5..1").exit_code == 2);
    CHECK(run("rank --bidegree nonsense").exit_code == 2);
    CHECK(run("relators --window q=1..2").exit_code == 2);
    CHECK(run("relators --format yaml").exit_code == 2);
}

TEST_CASE("membership grid") {
    RunResult ok = run("check-R --grid 0..0 --window u=-3..3,n=3 --seed 42");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"check_id\": \"R_SYM(0,0,0)\"") != std::string::npos);
    CHECK(ok.out.find("certificate_terms=") != std::string::npos);
}

TEST_CASE("exit code mapping") {
    ehall::Report rep;
    rep.records.push_back({"a", "", "", "", 0, 0, "PASS", "", 0.0});
    CHECK(rep.exit_code() == 0);
    rep.records.push_back({"b", "", "", "", 0, 0, "INCONCLUSIVE", "", 0.0});
    CHECK(rep.exit_code() == 3);
    rep.records.push_back({"c", "", "", "", 0, 0, "FAIL", "", 0.0});
    CHECK(rep.exit_code() == 1);
}

TEST_CASE("output file and config file") {
    std::string dir = std::string(EHALL_CLI_PATH) + ".cfgdir";
    std::string outpath = dir + ".report.json";
    RunResult r = run("check-cubic --m 0..2 --output " + outpath);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(outpath);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("CUBIC(1)") != std::string::npos);
    std::remove(outpath.c_str());

    std::string cfgpath = dir + ".cfg";
    {
        std::ofstream cfg(cfgpath);
        cfg << "seed=7\nformat=csv\n";
    }
    RunResult c = run("--config " + cfgpath + " rank --bidegree 2,1 --window -1..2,n=2");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("# seed=7") != std::string::npos);
    CHECK(c.out.find("quotient_rank=3") != std::string::npos);
    std::remove(cfgpath.c_str());
}

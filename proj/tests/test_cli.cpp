#include "doctest.h"

#include "test_support.hpp"

#include <algorithm>
#include <filesystem>
#include <string>

namespace {

const std::string cli = GTSP_CLI_PATH;

std::string q(const std::filesystem::path& p) {
    return p.string();
}

} // namespace

TEST_CASE("cli usage errors exit with 2, help with 0") {
    CHECK(testsup::run_command(cli).status == 2);
    CHECK(testsup::run_command(cli + " frobnicate").status == 2);
    CHECK(testsup::run_command(cli + " solve").status == 2);  // missing positional
    CHECK(testsup::run_command(cli + " gen --no-such-flag").status == 2);
    CHECK(testsup::run_command(cli + " --help").status == 0);
    CHECK(testsup::run_command(cli + " reduce --help").status == 0);
}

TEST_CASE("cli reduce prints the size summary") {
    auto dir = testsup::fresh_dir("cli_tmp_reduce");
    testsup::write_file(dir / "star.gtsp", "gtsp 4 3 -\n0 1 1\n0 2 1\n0 3 1\n");
    auto r = testsup::run_command(cli + " reduce " + q(dir / "star.gtsp") + " --cover exact");
    CHECK(r.status == 0);
    CHECK(r.output == "4 1 3 0 6\n");

    testsup::write_file(dir / "p3.gtsp", "gtsp 3 2 -\n0 1 1\n1 2 1\n");
    testsup::write_file(dir / "p3.cover", "0 1\n");
    r = testsup::run_command(cli + " reduce " + q(dir / "p3.gtsp") + " --cover file:" +
                             q(dir / "p3.cover"));
    CHECK(r.status == 0);
    CHECK(r.output == "3 2 2 1 2\n");
}

TEST_CASE("cli solve prints the tour and weight") {
    auto dir = testsup::fresh_dir("cli_tmp_solve");
    testsup::write_file(dir / "k2.gtsp", "gtsp 2 1 -\n0 1 5\n");
    auto r = testsup::run_command(cli + " solve " + q(dir / "k2.gtsp"));
    CHECK(r.status == 0);
    CHECK(r.output == "0 1 0\n10\n");
    r = testsup::run_command(cli + " solve " + q(dir / "k2.gtsp") + " --method brute");
    CHECK(r.output == "0 1 0\n10\n");
    r = testsup::run_command(cli + " solve " + q(dir / "k2.gtsp") + " --method heuristic --seed 0 -o " +
                             q(dir / "t.tour"));
    CHECK(r.status == 0);
    CHECK(r.output == "10\n");
    CHECK(testsup::read_file(dir / "t.tour") == "0 1 0\n");
    CHECK(testsup::run_command(cli + " solve " + q(dir / "k2.gtsp") + " --method nope").status == 1);
}

TEST_CASE("cli pipeline gen-reduce-solve-lift-verify holds weight identities") {
    auto dir = testsup::fresh_dir("cli_tmp_pipe");
    auto inst = q(dir / "inst.gtsp");
    CHECK(testsup::run_command(cli + " gen --family planted_cover --n 12 --cover-size 3 --seed 5 -o " +
                               inst)
              .status == 0);
    auto r = testsup::run_command(cli + " reduce " + inst + " -o " + q(dir / "k.gtsp") + " -m " +
                                  q(dir / "k.meta"));
    CHECK(r.status == 0);

    auto solve = testsup::run_command(cli + " solve " + q(dir / "k.gtsp") + " -o " + q(dir / "k.tour"));
    CHECK(solve.status == 0);

    auto lift = testsup::run_command(cli + " lift " + q(dir / "k.tour") + " " + q(dir / "k.meta") + " " +
                                     q(dir / "lifted.tour"));
    CHECK(lift.status == 0);

    auto verify = testsup::run_command(cli + " verify " + inst + " " + q(dir / "lifted.tour"));
    CHECK(verify.status == 0);
    CHECK(verify.output == lift.output);  // both print the lifted weight
}

TEST_CASE("cli verify reports budget violations") {
    auto dir = testsup::fresh_dir("cli_tmp_verify");
    testsup::write_file(dir / "k2.gtsp", "gtsp 2 1 -\n0 1 5\n");
    testsup::write_file(dir / "k2b.gtsp", "gtsp 2 1 9\n0 1 5\n");
    testsup::write_file(dir / "good.tour", "0 1 0\n");
    testsup::write_file(dir / "open.tour", "0 1\n");

    CHECK(testsup::run_command(cli + " verify " + q(dir / "k2.gtsp") + " " + q(dir / "good.tour"))
              .status == 0);
    CHECK(testsup::run_command(cli + " verify " + q(dir / "k2.gtsp") + " " + q(dir / "open.tour"))
              .status == 1);
    // Budget from the instance header.
    CHECK(testsup::run_command(cli + " verify " + q(dir / "k2b.gtsp") + " " + q(dir / "good.tour"))
              .status == 1);
    // Flag override in both directions.
    CHECK(testsup::run_command(cli + " verify " + q(dir / "k2b.gtsp") + " " + q(dir / "good.tour") +
                               " --budget 10")
              .status == 0);
    CHECK(testsup::run_command(cli + " verify " + q(dir / "k2.gtsp") + " " + q(dir / "good.tour") +
                               " --budget 9")
              .status == 1);
}

TEST_CASE("cli maps parse failures to exit 2") {
    auto dir = testsup::fresh_dir("cli_tmp_parse");
    testsup::write_file(dir / "bad.gtsp", "gtsp 2 1 -\n0 1 oops\n");
    auto r = testsup::run_command(cli + " reduce " + q(dir / "bad.gtsp") + " 2>&1");
    CHECK(r.status == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
    CHECK(testsup::run_command(cli + " solve " + q(dir / "missing.gtsp")).status == 1);
}

TEST_CASE("cli decision mode flows through reduce metadata") {
    auto dir = testsup::fresh_dir("cli_tmp_decision");
    auto inst = q(dir / "d.gtsp");
    CHECK(testsup::run_command(cli + " gen --family path --n 4 --wmin 2 --wmax 2 --budget 12 -o " +
                               inst)
              .status == 0);
    CHECK(testsup::read_file(dir / "d.gtsp").rfind("gtsp 4 3 12\n", 0) == 0);

    CHECK(testsup::run_command(cli + " reduce " + inst + " -m " + q(dir / "d.meta")).status == 0);
    auto meta = testsup::read_file(dir / "d.meta");
    CHECK(meta.find("mode decision\n") != std::string::npos);
    CHECK(meta.find("budget 12\n") != std::string::npos);

    CHECK(testsup::run_command(cli + " reduce " + inst + " --mode optimization -m " +
                               q(dir / "o.meta"))
              .status == 0);
    CHECK(testsup::read_file(dir / "o.meta").find("mode optimization\n") != std::string::npos);

    // Asking for decision mode without a budget in the header fails.
    testsup::write_file(dir / "nb.gtsp", "gtsp 2 1 -\n0 1 5\n");
    CHECK(testsup::run_command(cli + " reduce " + q(dir / "nb.gtsp") + " --mode decision").status == 1);
}

TEST_CASE("cli reduce can dump the hop graph") {
    auto dir = testsup::fresh_dir("cli_tmp_hop");
    testsup::write_file(dir / "t.gtsp", "gtsp 4 5 -\n0 1 1\n0 2 1\n0 3 2\n1 2 1\n1 3 3\n");
    testsup::write_file(dir / "t.cover", "0 1 2\n");
    auto r = testsup::run_command(cli + " reduce " + q(dir / "t.gtsp") + " --cover file:" +
                                  q(dir / "t.cover") + " --emit-hopgraph " + q(dir / "t.hop"));
    CHECK(r.status == 0);
    CHECK(testsup::read_file(dir / "t.hop") == "x:(0,1) y:3 penalty:1\nx:(1,0) y:3 penalty:1\n");
}

TEST_CASE("cli gen is byte-deterministic per seed") {
    auto dir = testsup::fresh_dir("cli_tmp_gen");
    const std::string args = " gen --family random_connected --n 20 --p 2/5 --seed 9 -o ";
    CHECK(testsup::run_command(cli + args + q(dir / "a.gtsp")).status == 0);
    CHECK(testsup::run_command(cli + args + q(dir / "b.gtsp")).status == 0);
    auto a = testsup::read_file(dir / "a.gtsp");
    CHECK(!a.empty());
    CHECK(a == testsup::read_file(dir / "b.gtsp"));
}

TEST_CASE("cli bench writes the csv and repeats byte-identically without timing") {
    auto dir = testsup::fresh_dir("cli_tmp_bench");
    testsup::write_file(dir / "specs.txt",
                        "# demo batch\n"
                        "planted_cover 12 1/3 1 10 3 11\n"
                        "star 5 - 2 2 - 0\n");
    const std::string args = " bench --specs " + q(dir / "specs.txt") + " --no-timing -o ";
    CHECK(testsup::run_command(cli + args + q(dir / "a.csv")).status == 0);
    CHECK(testsup::run_command(cli + args + q(dir / "b.csv")).status == 0);
    auto a = testsup::read_file(dir / "a.csv");
    CHECK(a == testsup::read_file(dir / "b.csv"));
    CHECK(a.rfind("id,family,seed", 0) == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') == 3);

    testsup::write_file(dir / "bad.txt", "star five - - - - -\n");
    CHECK(testsup::run_command(cli + " bench --specs " + q(dir / "bad.txt") + " -o " +
                               q(dir / "c.csv"))
              .status == 2);
}

#include <doctest.h>

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/graph_system.hpp"
#include "rainbow/instance_io.hpp"
#include "test_support.hpp"

using namespace rainbow;
using testsupport::run_cli;
using testsupport::slurp;
using testsupport::spit;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::vector<std::string> rows_without_millis(const std::string& table) {
    std::vector<std::string> rows;
    std::istringstream in(table);
    std::string line;
    while (std::getline(in, line)) rows.push_back(line.substr(0, line.rfind('\t')));
    return rows;
}

}  // namespace

TEST_CASE("gen emits a canonical instance") {
    const testsupport::CliResult res = run_cli("gen complete --n 6");
    REQUIRE(res.exit_code == 0);
    const GraphSystem sys = parse_system(res.out);
    CHECK(sys.vertex_count() == 6);
    CHECK(sys.is_square());
    CHECK(sys.edge_count() == 90);
    for (int c = 0; c < 6; ++c) CHECK(sys.min_color_degree(c) == 5);
    CHECK(serialize_system(sys) == res.out);
}

TEST_CASE("gen rejects bad parameters with a usage exit") {
    CHECK(run_cli("gen complete --n 2").exit_code == 2);
    CHECK(run_cli("gen balanced --n 7").exit_code == 2);
    CHECK(run_cli("gen complete").exit_code == 2);
    CHECK(run_cli("gen random --n 8").exit_code == 2);
    const testsupport::CliResult res = run_cli("gen unbalanced --n 4");
    CHECK(res.exit_code == 2);
    CHECK(contains(res.err, "error:"));
}

TEST_CASE("solve hampath emits a certificate the verify command accepts") {
    const auto dir = testsupport::fresh_temp_dir("hampath");
    const std::string inst = (dir / "inst.rgs").string();
    const std::string cert = (dir / "cert.txt").string();
    REQUIRE(run_cli("gen complete --n 8 --out " + inst).exit_code == 0);

    const testsupport::CliResult solved =
        run_cli("solve hampath --in " + inst + " --out " + cert);
    REQUIRE(solved.exit_code == 0);
    const Certificate parsed = parse_certificate(slurp(cert));
    REQUIRE(std::holds_alternative<RainbowPath>(parsed));
    CHECK(std::get<RainbowPath>(parsed).vertices.size() == 8);

    const testsupport::CliResult verified =
        run_cli("verify --in " + inst + " --cert " + cert);
    CHECK(verified.exit_code == 0);
    CHECK(contains(verified.out, "ok: path of 8 vertices"));
}

TEST_CASE("solve hampath reports absence differently per method") {
    const auto dir = testsupport::fresh_temp_dir("absence");
    const std::string inst = (dir / "inst.rgs").string();
    REQUIRE(run_cli("gen unbalanced --n 6 --out " + inst).exit_code == 0);

    const testsupport::CliResult constructive = run_cli("solve hampath --in " + inst);
    CHECK(constructive.exit_code == 1);
    CHECK(contains(constructive.err, "no rainbow Hamiltonian path found"));

    const testsupport::CliResult oracle =
        run_cli("solve hampath --in " + inst + " --method oracle");
    CHECK(oracle.exit_code == 1);
    CHECK(contains(oracle.err, "infeasible"));

    const testsupport::CliResult absorb =
        run_cli("solve hampath --in " + inst + " --method absorb");
    CHECK(absorb.exit_code == 2);
    CHECK(contains(absorb.err, "hampath has no absorb method"));
}

TEST_CASE("solve hamcycle closes a dense instance") {
    const auto dir = testsupport::fresh_temp_dir("hamcycle");
    const std::string inst = (dir / "inst.rgs").string();
    const std::string cert = (dir / "cert.txt").string();
    REQUIRE(run_cli("gen random --n 40 --min-deg 30 --seed 3 --out " + inst).exit_code == 0);

    const testsupport::CliResult solved =
        run_cli("solve hamcycle --in " + inst + " --seed 5 --out " + cert);
    REQUIRE(solved.exit_code == 0);
    const Certificate parsed = parse_certificate(slurp(cert));
    REQUIRE(std::holds_alternative<RainbowCycle>(parsed));
    CHECK(std::get<RainbowCycle>(parsed).vertices.size() == 40);

    const testsupport::CliResult verified =
        run_cli("verify --in " + inst + " --cert " + cert);
    CHECK(verified.exit_code == 0);
    CHECK(contains(verified.out, "ok: cycle of 40 vertices"));
}

TEST_CASE("solve pancyclic bundles one certificate per length") {
    const auto dir = testsupport::fresh_temp_dir("pancyclic");
    const std::string inst = (dir / "inst.rgs").string();
    REQUIRE(run_cli("gen complete --n 10 --out " + inst).exit_code == 0);

    const testsupport::CliResult solved = run_cli("solve pancyclic --in " + inst);
    REQUIRE(solved.exit_code == 0);
    const std::vector<Certificate> certs = parse_certificate_stream(solved.out);
    REQUIRE(certs.size() == 7);
    int expected = 3;
    for (const Certificate& cert : certs) {
        REQUIRE(std::holds_alternative<RainbowCycle>(cert));
        CHECK(static_cast<int>(std::get<RainbowCycle>(cert).vertices.size()) == expected);
        ++expected;
    }
}

TEST_CASE("oracle pancyclic reports the lengths it cannot realize") {
    const auto dir = testsupport::fresh_temp_dir("missing");
    const std::string inst = (dir / "inst.rgs").string();
    REQUIRE(run_cli("gen balanced --n 6 --out " + inst).exit_code == 0);

    const testsupport::CliResult res =
        run_cli("solve pancyclic --in " + inst + " --method oracle");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.err, "missing lengths: 3 5"));
    const std::vector<Certificate> certs = parse_certificate_stream(res.out);
    REQUIRE(certs.size() == 1);
    CHECK(std::get<RainbowCycle>(certs[0]).vertices.size() == 4);

    CHECK(run_cli("solve pancyclic --in " + inst).exit_code == 2);
}

TEST_CASE("oracle subcommands agree with and without pruning") {
    const auto dir = testsupport::fresh_temp_dir("prune");
    const std::string inst = (dir / "inst.rgs").string();
    REQUIRE(run_cli("gen random --n 7 --min-deg 3 --seed 2 --out " + inst).exit_code == 0);
    const GraphSystem sys = parse_system(slurp(inst));

    for (const std::string sub : {"hamcycle", "hampath"}) {
        const testsupport::CliResult pruned = run_cli("oracle " + sub + " --in " + inst);
        const testsupport::CliResult full =
            run_cli("oracle " + sub + " --in " + inst + " --no-prune");
        CHECK(pruned.exit_code == full.exit_code);
        CHECK((pruned.exit_code == 0 || pruned.exit_code == 1));
        if (pruned.exit_code == 0) {
            const Certificate a = parse_certificate(pruned.out);
            const Certificate b = parse_certificate(full.out);
            CHECK(a.index() == b.index());
        }
    }

    const testsupport::CliResult four = run_cli("oracle cycle --in " + inst + " --len 4");
    CHECK((four.exit_code == 0 || four.exit_code == 1));
    if (four.exit_code == 0)
        CHECK(std::get<RainbowCycle>(parse_certificate(four.out)).vertices.size() == 4);
}

TEST_CASE("oracle refuses instances beyond its cap") {
    const auto dir = testsupport::fresh_temp_dir("cap");
    const std::string inst = (dir / "inst.rgs").string();
    REQUIRE(run_cli("gen complete --n 13 --out " + inst).exit_code == 0);
    const testsupport::CliResult res = run_cli("oracle hamcycle --in " + inst);
    CHECK(res.exit_code == 2);
    CHECK(contains(res.err, "error:"));
}

TEST_CASE("verify distinguishes violations from unreadable input") {
    const auto dir = testsupport::fresh_temp_dir("verify");
    const std::string inst = (dir / "inst.rgs").string();
    const std::string cert = (dir / "cert.txt").string();
    REQUIRE(run_cli("gen complete --n 5 --out " + inst).exit_code == 0);

    spit(cert, "path 3\n0 1 2\n0 0\n");
    const testsupport::CliResult violated = run_cli("verify --in " + inst + " --cert " + cert);
    CHECK(violated.exit_code == 1);
    CHECK(contains(violated.out, "violation:"));

    spit(cert, "cycle 3\n0 1 2\n0 1\n");
    CHECK(run_cli("verify --in " + inst + " --cert " + cert).exit_code == 2);

    spit(cert, "");
    const testsupport::CliResult empty = run_cli("verify --in " + inst + " --cert " + cert);
    CHECK(empty.exit_code == 2);
    CHECK(contains(empty.err, "no certificates"));

    CHECK(run_cli("verify --in " + inst + " --cert " + (dir / "absent.txt").string())
              .exit_code == 2);
}

TEST_CASE("verify reports every certificate in a bundle") {
    const auto dir = testsupport::fresh_temp_dir("bundle");
    const std::string inst = (dir / "inst.rgs").string();
    REQUIRE(run_cli("gen complete --n 10 --out " + inst).exit_code == 0);
    const testsupport::CliResult solved = run_cli("solve pancyclic --in " + inst);
    REQUIRE(solved.exit_code == 0);

    const std::string cert = (dir / "bundle.txt").string();
    spit(cert, solved.out);
    const testsupport::CliResult verified = run_cli("verify --in " + inst + " --cert " + cert);
    CHECK(verified.exit_code == 0);
    std::istringstream lines(verified.out);
    std::string line;
    int ok_lines = 0;
    while (std::getline(lines, line)) {
        CHECK(contains(line, "ok: cycle of"));
        ++ok_lines;
    }
    CHECK(ok_lines == 7);
}

TEST_CASE("sweep tables are identical across thread counts except for timings") {
    const std::string common = "sweep --task hampath --n 10 --min-deg 5 --seeds 6 --seed0 1";
    const testsupport::CliResult serial = run_cli(common + " --threads 1");
    const testsupport::CliResult parallel = run_cli(common + " --threads 3");
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    const std::vector<std::string> a = rows_without_millis(serial.out);
    const std::vector<std::string> b = rows_without_millis(parallel.out);
    REQUIRE(a.size() == 7);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(contains(a[i], "\tfound"));
}

TEST_CASE("sweep marks instances the solver must reject") {
    const testsupport::CliResult res =
        run_cli("sweep --task pancyclic --n 7 --min-deg 2 --seeds 3");
    REQUIRE(res.exit_code == 0);
    const std::vector<std::string> rows = rows_without_millis(res.out);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(contains(rows[i], "\trejected"));
}

TEST_CASE("unknown methods and missing files are usage errors") {
    CHECK(run_cli("solve hampath --in nowhere.rgs --method quantum").exit_code == 2);
    const testsupport::CliResult res = run_cli("solve hampath --in nowhere.rgs");
    CHECK(res.exit_code == 2);
    CHECK(contains(res.err, "cannot open"));
    CHECK(run_cli("frobnicate").exit_code == 2);
}

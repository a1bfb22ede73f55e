// End-to-end runs of the command-line tool: subcommand wiring, file
// formats, the exit-status contract, and byte-level reproducibility.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "simplexcodes/examples.hpp"
#include "simplexcodes/serialization.hpp"

#ifndef SIMPLEXCODES_CLI_PATH
#error "SIMPLEXCODES_CLI_PATH must point at the built binary"
#endif

using namespace simplexcodes;
namespace fs = std::filesystem;

namespace {

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() / ("simplexcodes-cli-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = std::string(SIMPLEXCODES_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("construct family writes a verified code file") {
    Workspace ws;
    const std::string out = ws.path("n7.json");
    REQUIRE(run("construct family --g 2 --m 1 --delta 2 --eps -1 --output " + out) == 0);
    const SimplexCode code = code_from_json(read_file(out));
    CHECK(code.q == 2);
    CHECK(code.N == 7);
    CHECK(*code.distance == 3);
    CHECK(codes_amplitudes_equal(code, load_fixture("n7-fock")));
}

TEST_CASE("construct tverberg --scaled reproduces the 22-point pipeline") {
    Workspace ws;
    const std::string out = ws.path("pin6.json");
    REQUIRE(run("construct tverberg --K 2 --t 2 --scaled --space pi --output " + out) == 0);
    const SimplexCode code = code_from_json(read_file(out));
    CHECK(codes_amplitudes_equal(code, load_fixture("pi-n6")));
    CHECK(*code.distance == 3);
    CHECK(code.provenance.find("scaled(K=2,t=2)") != std::string::npos);
}

TEST_CASE("construct tverberg from an l1 file") {
    Workspace ws;
    L1Code b;
    b.q = 3;
    b.N = 3;
    b.points = {SimplexPoint{3, 0, 0}, SimplexPoint{0, 3, 0}, SimplexPoint{0, 0, 3},
                SimplexPoint{1, 1, 1}};
    b.canonicalize();
    write_atomic(ws.path("n3code.json"), to_json(b));
    const std::string out = ws.path("code.json");
    REQUIRE(run("construct tverberg --l1 " + ws.path("n3code.json") +
                " --K 2 --t 1 --space fock --output " + out) == 0);
    CHECK(codes_amplitudes_equal(code_from_json(read_file(out)),
                                 load_fixture("wasilewski-banaczek")));
}

TEST_CASE("construct scaled and sidon emit l1 code files") {
    Workspace ws;
    REQUIRE(run("construct scaled --K 2 --t 2 --output " + ws.path("b.json")) == 0);
    const L1Code b = l1code_from_json(read_file(ws.path("b.json")));
    CHECK(b.size() == 22);
    CHECK(*b.certified_distance == 3);

    REQUIRE(run("construct sidon --p 2 --t 2 --q 3 --N 4 --output " + ws.path("c.json")) == 0);
    const L1Code c = l1code_from_json(read_file(ws.path("c.json")));
    CHECK(c.size() >= 3);
    CHECK(*c.certified_distance >= 3);
}

TEST_CASE("verify exit status reflects the verdict") {
    Workspace ws;
    const std::string code = ws.path("n7.json");
    REQUIRE(run("construct family --g 2 --m 1 --delta 2 --eps -1 --output " + code) == 0);
    CHECK(run("verify " + code + " --checks kl --t 2") == 0);
    CHECK(run("verify " + code + " --checks kl --t 3") == 1);
    CHECK(run("verify " + code + " --checks kl,oracle-ad,fidelity --t 2 --output " +
              ws.path("report.json")) == 0);
    const std::string report = read_file(ws.path("report.json"));
    CHECK(report.find("\"passed\": true") != std::string::npos);
    // Usage errors: unknown check, missing file.
    CHECK(run("verify " + code + " --checks no-such-check --t 2") == 2);
    CHECK(run("verify " + ws.path("missing.json") + " --checks kl --t 2") == 2);
}

TEST_CASE("verify covariance and deletion oracles") {
    Workspace ws;
    write_atomic(ws.path("bd8.json"), to_json(load_fixture("bd8-n11")));
    CHECK(run("verify " + ws.path("bd8.json") + " --checks covariance --gates X,T --t 2") == 0);

    write_atomic(ws.path("qutrits.json"), to_json(load_fixture("three-qutrits")));
    CHECK(run("verify " + ws.path("qutrits.json") + " --checks oracle-deletion --t 1") == 0);
}

TEST_CASE("map relabels and handles the distance") {
    Workspace ws;
    write_atomic(ws.path("n7.json"), to_json(load_fixture("n7-fock")));
    REQUIRE(run("map " + ws.path("n7.json") + " --to pi --output " + ws.path("pi.json")) == 0);
    const SimplexCode pi = code_from_json(read_file(ws.path("pi.json")));
    CHECK(pi.space == SpaceTag::PI);
    CHECK(*pi.distance == 3);

    // Same-tag map is the identity on amplitudes.
    REQUIRE(run("map " + ws.path("n7.json") + " --to fock --output " + ws.path("same.json")) == 0);
    CHECK(codes_amplitudes_equal(code_from_json(read_file(ws.path("same.json"))),
                                 load_fixture("n7-fock")));

    // Spin-source at q=3 clears the distance.
    write_atomic(ws.path("was.json"), to_json(map_space(load_fixture("wasilewski-banaczek"),
                                                        SpaceTag::Spin)));
    REQUIRE(run("map " + ws.path("was.json") + " --to pi --output " + ws.path("cleared.json")) == 0);
    CHECK(!code_from_json(read_file(ws.path("cleared.json"))).distance.has_value());
}

TEST_CASE("examples subcommand") {
    CHECK(run("examples n7") == 0);
    CHECK(run("examples --all") == 0);
    CHECK(run("examples no-such-example") == 2);
}

TEST_CASE("simplex subcommand") {
    Workspace ws;
    REQUIRE(run("simplex --q 3 --N 3 --output " + ws.path("s.json")) == 0);
    const std::string text = read_file(ws.path("s.json"));
    CHECK(text.find("\"count\": 10") != std::string::npos);
}

TEST_CASE("construction failures exit with status 3") {
    Workspace ws;
    L1Code separated;
    separated.q = 2;
    separated.N = 3;
    separated.points = {SimplexPoint{0, 3}, SimplexPoint{3, 0}};
    separated.canonicalize();
    write_atomic(ws.path("sep.json"), to_json(separated));
    CHECK(run("construct tverberg --l1 " + ws.path("sep.json") + " --K 2 --t 1 --output " +
              ws.path("never.json")) == 3);
}

TEST_CASE("identical runs produce identical bytes") {
    Workspace ws;
    REQUIRE(run("construct tverberg --K 2 --t 2 --scaled --space pi --output " + ws.path("a.json")) == 0);
    REQUIRE(run("construct tverberg --K 2 --t 2 --scaled --space pi --output " + ws.path("b.json")) == 0);
    CHECK(read_file(ws.path("a.json")) == read_file(ws.path("b.json")));
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("construct tverberg --K 2 --t 1") == 2);  // neither --scaled nor --l1
    CHECK(run("no-such-subcommand") == 2);
    CHECK(run("") == 2);  // a subcommand is required
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "stackcoh/cli.hpp"
#include "stackcoh/descriptor_json.hpp"
#include "stackcoh/render.hpp"

namespace {

std::string repo_file(const std::string& rel) { return std::string(STACKCOH_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("descriptor JSON: fixtures parse and validate") {
    for (const char* f : {"descriptors/p23_orbicurve.json", "descriptors/affine_p5.json",
                          "descriptors/tower_p2.json", "descriptors/tower_p3.json",
                          "descriptors/nodal_mixed.json", "descriptors/dihedral_m3.json",
                          "descriptors/dihedral_m5.json", "descriptors/genus1_bz2.json"}) {
        CHECK_NOTHROW(cli::load_descriptor(repo_file(f)));
    }
}

TEST_CASE("descriptor JSON: unknown keys and type errors are all reported") {
    std::string text = R"({
      "characteristic": 0,
      "coarse": {"kind": "projective", "genus": 0, "colour": "blue"},
      "generic_stabilizer": {"kind": "trivial"},
      "stacky_points": [{"label": "p", "index": 2.5}],
      "gerbe": {"kind": "trivial_product"},
      "extra": 1
    })";
    cli::ParsedDescriptor parsed = cli::parse_descriptor_json(text);
    CHECK(parsed.problems.size() >= 3);  // unknown key x2 + non-exact integer
}

TEST_CASE("rendering round-trips to the canonical group") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> fr(0, 3), nf(0, 3), mult(2, 6);
    for (int it = 0; it < 200; ++it) {
        zlin::AbelianGroup g;
        g.free_rank = fr(rng);
        zlin::Int d = 1;
        int k = nf(rng);
        for (int i = 0; i < k; ++i) {
            d *= mult(rng);
            g.invariant_factors.push_back(d);
        }
        CHECK(cli::parse_group_string(cli::render_group(g)) == g);
    }
    CHECK(cli::parse_group_string("0").is_trivial());
    CHECK(cli::parse_group_string("Z") == zlin::AbelianGroup::free(1));
}

TEST_CASE("cohom command renders the worked table") {
    cli::RunResult r = cli::run({"cohom", "--input", repo_file("descriptors/p23_orbicurve.json"),
                                 "--max-degree", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("H^0 = k*") != std::string::npos);
    CHECK(r.out.find("H^3 = Z/6") != std::string::npos);
    CHECK(r.out.find("H^4 = 0") != std::string::npos);
    CHECK(r.out.find("H^5 = Z/6") != std::string::npos);
}

TEST_CASE("groupcoh command with the oracle") {
    cli::RunResult r =
        cli::run({"groupcoh", "--group", "D6", "--coeff", "Z", "--degree", "2", "--oracle"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Z/2") != std::string::npos);
    CHECK(r.out.find("bar_oracle") != std::string::npos);

    cli::RunResult closed =
        cli::run({"groupcoh", "--group", "Z6", "--coeff", "k*", "--degree", "3"});
    CHECK(closed.exit_code == 0);
    CHECK(closed.out.find("Z/6") != std::string::npos);
}

TEST_CASE("kummer command renders the trivial group for n = 1") {
    cli::RunResult r =
        cli::run({"kummer", "--input", repo_file("descriptors/affine_p5.json"), "--n", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("= 0") != std::string::npos);
}

TEST_CASE("exit codes follow the documented mapping") {
    CHECK(cli::run({"frobnicate"}).exit_code == 64);
    CHECK(cli::run({"cohom"}).exit_code == 64);  // missing required option
    CHECK(cli::run({"cohom", "--input", "/nonexistent.json"}).exit_code == 1);

    // schema violations: every problem on standard error, exit 1
    cli::RunResult bad =
        cli::run({"cohom", "--input", repo_file("tests/data/bad_descriptor.json")});
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("unknown key") != std::string::npos);

    // budget exhaustion is exit 2
    cli::RunResult budget =
        cli::run({"groupcoh", "--group", "Z6", "--coeff", "Z", "--degree", "9", "--oracle"});
    CHECK(budget.exit_code == 2);
    CHECK(budget.err.find("exceeds budget") != std::string::npos);
}

TEST_CASE("json output is stable across runs") {
    std::vector<std::string> args = {"cohom", "--input", repo_file("descriptors/tower_p2.json"),
                                     "--max-degree", "4", "--format", "json"};
    cli::RunResult a = cli::run(args);
    cli::RunResult b = cli::run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // parses back and carries one record per degree
    auto parsed = nlohmann::json::parse(a.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 5);
    for (int r = 0; r <= 4; ++r) CHECK(parsed[r]["degree"] == r);
    // exact values round-trip through the group grammar
    for (const auto& rec : parsed)
        if (rec["kind"] == "exact")
            CHECK_NOTHROW(cli::parse_group_string(rec["value"].get<std::string>()));
}

TEST_CASE("crosscheck command emits both routes") {
    cli::RunResult r =
        cli::run({"crosscheck", "--input", repo_file("descriptors/dihedral_m3.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("direct route:   H^2 = Z/3") != std::string::npos);
    CHECK(r.out.find("banding route:  H^2 = 0") != std::string::npos);
    CHECK(r.out.find("verdict: unequal") != std::string::npos);
}

TEST_CASE("verify command statuses") {
    cli::RunResult r = cli::run({"verify", "zlin"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS    zlin.snf_certificates") != std::string::npos);

    cli::RunResult cross = cli::run({"verify", "crosschecks"});
    CHECK(cross.exit_code == 0);  // flagged entries never fail the suite
    CHECK(cross.out.find("FLAGGED crosschecks.tower_p2") != std::string::npos);

    CHECK(cli::run({"verify", "bogus"}).exit_code == 1);
}

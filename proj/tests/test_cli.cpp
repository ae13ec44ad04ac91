#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "nashgate/nashgate.hpp"
#include "support/minischema.hpp"
#include "support/process.hpp"

namespace {

const std::string bin = NASHGATE_BIN_PATH;

nlohmann::json load_schema() {
    std::ifstream f(NASHGATE_SCHEMA_PATH);
    REQUIRE(f.good());
    return nlohmann::json::parse(f);
}

// Runs the CLI, checks the exit code, and validates --json output against
// the shipped schema.
nlohmann::json run_json(const std::string& args, int expected_exit = 0) {
    auto r = testproc::run(bin, args + " --json");
    INFO("command: " << args << "\nstderr: " << r.err);
    CHECK(r.exit_code == expected_exit);
    auto doc = nlohmann::json::parse(r.out);
    static const nlohmann::json schema = load_schema();
    auto v = minischema::validate(doc, schema, schema);
    INFO("schema violation: " << v.message);
    CHECK(v.ok);
    return doc;
}

}  // namespace

TEST_CASE("certificate subcommand issues for E8") {
    auto doc = run_json("certificate --catalog E8");
    CHECK(doc["command"] == "certificate");
    CHECK(doc["payload"]["issued"] == true);
    CHECK(doc["payload"]["negative_definite"] == true);
    CHECK(doc["payload"]["terms"].size() == 8);
}

TEST_CASE("certificate subcommand refuses with exit 3") {
    auto doc = run_json("certificate --catalog nonminimal-demo", 3);
    CHECK(doc["payload"]["issued"] == false);
    CHECK(doc["payload"]["failure_reasons"][0] == "NON_MINIMAL");

    auto indefinite = run_json("certificate --catalog indefinite-demo", 3);
    CHECK(indefinite["payload"]["failure_reasons"][0] == "NOT_NEGATIVE_DEFINITE");
}

TEST_CASE("scan subcommand on A2") {
    auto doc = run_json("scan --catalog A2 --target E1 --max-returns 10");
    CHECK(doc["payload"]["total"] == 10);
    CHECK(doc["payload"]["counts"]["feasible"] == 0);

    // thin-adapter check: the CLI payload equals what the library computes
    auto g = std::get<nashgate::dual_graph>(nashgate::catalog_lookup("A2"));
    auto lib = nashgate::scan_payload(g, nashgate::scan_adjacencies(g, 0, 10));
    CHECK(nlohmann::json(lib) == doc["payload"]);
}

TEST_CASE("subcommands are thin adapters over the library") {
    auto cert_doc = run_json("certificate --catalog D5");
    auto g = std::get<nashgate::dual_graph>(nashgate::catalog_lookup("D5"));
    auto cert_lib = nashgate::certificate_payload(g, nashgate::certificate(g));
    CHECK(nlohmann::json(cert_lib) == cert_doc["payload"]);

    auto milnor_doc = run_json("milnor --catalog tacnode-embedded");
    auto d = std::get<nashgate::embedded_resolution>(
        nashgate::catalog_lookup("tacnode-embedded"));
    CHECK(nlohmann::json(nashgate::milnor_payload(d)) == milnor_doc["payload"]);

    auto analyze_doc = run_json("analyze --catalog E6");
    auto e6 = std::get<nashgate::dual_graph>(nashgate::catalog_lookup("E6"));
    CHECK(nlohmann::json(nashgate::analyze_payload(e6)) == analyze_doc["payload"]);
}

TEST_CASE("identical invocations produce byte-identical reports") {
    auto first = testproc::run(bin, "analyze --catalog E7 --json");
    auto second = testproc::run(bin, "analyze --catalog E7 --json");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("scan resolves the target from an arc declaration") {
    auto path = testproc::write_temp_file("arc_scan.sdg",
                                          "graph demo\n"
                                          "component E1 self=-2 genus=0\n"
                                          "component E2 self=-2 genus=0\n"
                                          "edge E1 E2\n"
                                          "arc E1\n");
    auto doc = run_json("scan " + path.string() + " --max-returns 4");
    CHECK(doc["payload"]["target"] == "E1");
    std::filesystem::remove(path);

    auto r = testproc::run(bin, "scan --catalog A2 --max-returns 4");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("MISSING_TARGET") != std::string::npos);
}

TEST_CASE("validate subcommand reports parse diagnostics on stderr") {
    auto path = testproc::write_temp_file("broken.sdg",
                                          "graph broken\n"
                                          "component E1 self=-2 genus=0\n"
                                          "edge E1 E1\n");
    auto r = testproc::run(bin, "validate " + path.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("SELF_EDGE") != std::string::npos);
    CHECK(r.err.find("line 3") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("validate emits a schema-conforming error document with --json") {
    auto path = testproc::write_temp_file("broken2.sdg",
                                          "graph broken\n"
                                          "component E1 self=-2 genus=0\n"
                                          "component E2 self=-2 genus=0\n");
    auto doc = run_json("validate " + path.string(), 2);
    CHECK(doc["error"]["code"] == "DISCONNECTED");
    std::filesystem::remove(path);
}

TEST_CASE("validate accepts the catalog") {
    auto doc = run_json("validate --catalog cusp-embedded");
    CHECK(doc["payload"]["kind"] == "embedded-resolution");
    CHECK(doc["payload"]["branches"] == 1);
}

TEST_CASE("analyze subcommand") {
    auto doc = run_json("analyze --catalog A2");
    CHECK(doc["payload"]["negative_definite"] == true);
    CHECK(doc["payload"]["sign_report"]["all_nonpositive"] == true);
    CHECK(doc["payload"]["matrix"][0][0] == -2);

    auto indefinite = run_json("analyze --catalog indefinite-demo");
    CHECK(indefinite["payload"]["negative_definite"] == false);
    CHECK(indefinite["payload"]["witness_minor_order"] == 1);
    CHECK_FALSE(indefinite["payload"].contains("sign_report"));
}

TEST_CASE("bound subcommand") {
    auto doc = run_json("bound --catalog A2 --target E1 --a 1,1");
    CHECK(doc["payload"]["returns_bound"] == -1);
    CHECK(doc["payload"]["refined_bound"] == 0);
    CHECK(doc["payload"]["final_bound"] == 0);
    CHECK(doc["payload"]["verdict"] == "IMPOSSIBLE_WEDGE");

    auto r = testproc::run(bin, "bound --catalog A2 --target E1");
    CHECK(r.exit_code == 2);
    auto bad = testproc::run(bin, "bound --catalog A2 --target E1 --a 1,x");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("milnor subcommand") {
    auto doc = run_json("milnor --catalog cusp-embedded");
    CHECK(doc["payload"]["total_transform"] == nlohmann::json::array({2, 3, 6}));
    CHECK(doc["payload"]["chi_from_resolution"] == -1);
    CHECK(doc["payload"]["chi_from_branches"] == -1);
    CHECK(doc["payload"]["consistent"] == true);

    auto r = testproc::run(bin, "milnor --catalog A2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("catalog subcommand lists everything") {
    auto doc = run_json("catalog");
    bool has_e8 = false;
    for (const auto& entry : doc["payload"]["entries"])
        if (entry["name"] == "E8") has_e8 = true;
    CHECK(has_e8);
    CHECK(doc["payload"]["entries"].size() == nashgate::catalog_names().size());
}

TEST_CASE("unknown catalog names exit with code 2") {
    auto r = testproc::run(bin, "certificate --catalog Zorp");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("UNKNOWN_CATALOG_NAME") != std::string::npos);
}

TEST_CASE("input is required, and only one input source is allowed") {
    auto r = testproc::run(bin, "analyze");
    CHECK(r.exit_code == 2);
    auto both = testproc::run(bin, "analyze --catalog A2 /tmp/whatever.sdg");
    CHECK(both.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2, help with 0") {
    auto bare = testproc::run(bin, "");
    CHECK(bare.exit_code == 2);
    auto unknown = testproc::run(bin, "frobnicate");
    CHECK(unknown.exit_code == 2);
    auto help = testproc::run(bin, "--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("scan") != std::string::npos);

    auto bad_target = testproc::run(bin, "scan --catalog A2 --target E9 --max-returns 3");
    CHECK(bad_target.exit_code == 2);
    CHECK(bad_target.err.find("UNKNOWN_COMPONENT") != std::string::npos);
}

TEST_CASE("human-readable output is the default") {
    auto r = testproc::run(bin, "certificate --catalog E8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("certificate issued") != std::string::npos);
    CHECK(r.out.find("{") == std::string::npos);
}

TEST_CASE("scan reports are byte-identical across --jobs settings") {
    auto seq = testproc::run(bin, "scan --catalog E8 --target E5 --max-returns 8 --jobs 1 --json");
    auto par = testproc::run(bin, "scan --catalog E8 --target E5 --max-returns 8 --jobs 4 --json");
    CHECK(seq.exit_code == 0);
    CHECK(par.exit_code == 0);
    CHECK(seq.out == par.out);
    CHECK_FALSE(seq.out.empty());
}

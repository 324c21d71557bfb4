#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "gkmflow/ddops.hpp"
#include "gkmflow/gkmclass.hpp"
#include "support/run_cli.hpp"

using namespace gkmflow;
using testsupport::run_cli;
using json = nlohmann::json;

TEST_CASE("cli: identical invocations give byte-identical output", "[cli]") {
    auto a = run_cli("classes --type A2 --basis t --format json");
    auto b = run_cli("classes --type A2 --basis t --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run_cli("graph --type A3 --hessenberg highest-root --format dot");
    auto d = run_cli("graph --type A3 --hessenberg highest-root --format dot");
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("cli: classes JSON round-trips through the GKM checker", "[cli]") {
    auto res = run_cli("classes --type A3 --format json");
    REQUIRE(res.exit_code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["type"] == "A3");
    CHECK(doc["hessenberg"] == "highest-root");

    RootSystem rs = build_root_system({Family::A, 3});
    WeylGroup g = generate_group(rs);
    HessenbergSet h = highest_root_hessenberg(rs);
    LabeledGraph graph = hessenberg_graph(g, h);
    FlowUpFamily fam = build_family(g, h);

    std::vector<std::string> names = doc["variables"].get<std::vector<std::string>>();
    REQUIRE(doc["classes"].size() == static_cast<size_t>(g.size()));
    for (const auto& cls : doc["classes"]) {
        CohomologyClass c(g.size(), rs.rank());
        for (auto it = cls["values"].begin(); it != cls["values"].end(); ++it)
            c.at(g.parse_name(it.key())) = parse_polynomial(it.value().get<std::string>(), names);
        // reconstructed class passes the GKM conditions and equals the build
        CHECK(check_gkm(g, graph, c).empty());
        CHECK(c == fam.at(g.parse_name(cls["w"].get<std::string>())));
        CHECK(cls["degree"].get<int>() == hessenberg_length(g, g.parse_name(cls["w"].get<std::string>()), h));
    }
}

TEST_CASE("cli: graph shapes", "[cli]") {
    auto dot = run_cli("graph --type A2 --hessenberg full --format dot");
    CHECK(dot.exit_code == 0);
    size_t edges = 0, pos = 0;
    while ((pos = dot.out.find("->", pos)) != std::string::npos) {
        ++edges;
        pos += 2;
    }
    CHECK(edges == 9);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("\"1.2.1\"") != std::string::npos);

    auto gd = run_cli("graph --type A2 --hessenberg highest-root --format json");
    REQUIRE(gd.exit_code == 0);
    CHECK(json::parse(gd.out)["edges"].size() == 6);

    auto ideal = run_cli("graph --type A2 --hessenberg ideal=1,1 --format json");
    CHECK(ideal.exit_code == 0);
    CHECK(json::parse(ideal.out)["edges"].size() == 6);
}

TEST_CASE("cli: check suites pass on A2 and A3", "[cli]") {
    CHECK(run_cli("check --type A2 --suite all").exit_code == 0);
    CHECK(run_cli("check --type A3 --suite all").exit_code == 0);
    auto json_out = run_cli("check --type A2 --suite axioms --format json");
    CHECK(json_out.exit_code == 0);
    CHECK(json::parse(json_out.out)["status"] == "pass");
}

TEST_CASE("cli: exploratory suite reports an outcome for B2 and G2", "[cli]") {
    for (const char* t : {"B2", "G2"}) {
        auto res = run_cli(std::string("check --type ") + t + " --suite exploratory");
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("exploratory.build") != std::string::npos);
    }
}

TEST_CASE("cli: expand structure constants", "[cli]") {
    auto res = run_cli("expand --type A2 --u 1 --v 1 --format json");
    REQUIRE(res.exit_code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["coefficients"]["1"] == "a1");
    CHECK(doc["coefficients"]["1.2"] == "a2");
    CHECK(doc["coefficients"]["1.2.1"] == "-1");
    CHECK(doc["coefficients"].size() == 3);
}

TEST_CASE("cli: roots output", "[cli]") {
    auto res = run_cli("roots --type G2 --format json");
    REQUIRE(res.exit_code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["highest_root"] == json::array({2, 3}));
    CHECK(doc["positive_roots"].size() == 6);
}

TEST_CASE("cli: character command", "[cli]") {
    auto res = run_cli("character --type A2 --format json");
    REQUIRE(res.exit_code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["multiplicities"]["reflection"] == "1");
    CHECK(doc["multiplicities"]["trivial"] == "4");
    CHECK(doc["status"] == "pass");
}

TEST_CASE("cli: usage errors exit 2", "[cli]") {
    CHECK(run_cli("roots --type E8").exit_code == 2);
    CHECK(run_cli("roots").exit_code == 2);
    CHECK(run_cli("frobnicate --type A2").exit_code == 2);
    CHECK(run_cli("classes --type B2 --basis t").exit_code == 2);
    CHECK(run_cli("classes --type A1").exit_code == 2); // degenerate: empty highest-root set
    CHECK(run_cli("graph --type A2 --hessenberg ideal=1,0").exit_code == 2);
    CHECK(run_cli("graph --type A2 --hessenberg ideal=5,5").exit_code == 2);
    CHECK(run_cli("check --type A2 --suite bogus").exit_code == 2);
    CHECK(run_cli("character --type G2").exit_code == 2);
    CHECK(run_cli("expand --type A2 --u 9.9 --v e").exit_code == 2);
}

#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include <grkit/grkit.hpp>

using namespace grkit;
namespace fs = std::filesystem;

TEST_CASE("group table json round trip") {
    for (const char* spec : {"cyclic:7", "dicyclic:4", "hsn:3,8", "abelian:2,2,4"}) {
        FiniteGroup G = construct(spec);
        INFO(spec);
        auto j = group_table_json(G);
        FiniteGroup H = group_from_json(j, "inline");
        REQUIRE(H.order() == G.order());
        REQUIRE(G.same_table(H));
        REQUIRE(H.generator_labels() == G.generator_labels());
    }
}

TEST_CASE("group table file round trip") {
    fs::path p = fs::temp_directory_path() / ("grkit_io_" + std::to_string(::getpid()) + ".json");
    FiniteGroup G = construct("dicyclic:3");
    write_group_table(G, p.string());
    FiniteGroup H = read_group_table(p.string());
    REQUIRE(G.same_table(H));
    fs::remove(p);
}

TEST_CASE("table reader rejects malformed input") {
    REQUIRE_THROWS_AS(read_group_table("/nonexistent/grkit.json"), error);
    auto reject = [](const char* text) {
        nlohmann::json j = nlohmann::json::parse(text);
        REQUIRE_THROWS_AS(group_from_json(j, "test"), error);
    };
    reject(R"({"order": 2})");                                       // no table
    reject(R"({"order": 2, "table": [[0, 1], [1, 2]]})");            // entry out of range
    reject(R"({"order": 3, "table": [[0, 1], [1, 0]]})");            // order mismatch
    reject(R"({"order": 2, "table": [[1, 0], [0, 1]]})");            // 0 not identity
}

TEST_CASE("report json shape and key order") {
    VerificationReport rep;
    rep.id = "demo";
    rep.claim = "sample claim";
    rep.param("alpha", 1);
    rep.param("beta", "two");
    rep.cases_checked = 3;
    rep.finish();
    REQUIRE(rep.passed());
    auto j = rep.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys == std::vector<std::string>{"id", "claim", "status", "parameters",
                                             "cases_checked", "counterexamples", "notes"});
    REQUIRE(j["status"] == "pass");
    // timing only on request, so reports stay byte-comparable
    REQUIRE(!j.contains("wall_ms"));
    REQUIRE(rep.to_json(true).contains("wall_ms"));
}

TEST_CASE("report status wiring") {
    VerificationReport rep;
    rep.claim = "will fail";
    rep.cases_checked = 1;
    rep.counterexample("bad");
    rep.finish();
    REQUIRE(rep.status == VerificationReport::Status::fail);
    REQUIRE(rep.consistent());

    VerificationReport empty;
    empty.claim = "nothing to do";
    empty.finish();
    REQUIRE(empty.status == VerificationReport::Status::partial);
    REQUIRE(empty.consistent());

    // inconsistent state is detectable
    VerificationReport broken;
    broken.claim = "zero cases but pass";
    broken.status = VerificationReport::Status::pass;
    REQUIRE(!broken.consistent());
}

TEST_CASE("to_text carries the claim id") {
    VerificationReport rep;
    rep.id = "lemma2";
    rep.claim = "c";
    rep.cases_checked = 1;
    rep.finish();
    REQUIRE(rep.to_text().rfind("[pass] lemma2: c", 0) == 0);
}

TEST_CASE("verification reports from the checkers are consistent") {
    FiniteGroup s3 = construct("hsn:3,2");
    for (const auto& rep :
         {verify_lemma2(s3, parse_field_choice("0")), verify_lemma3(s3),
          verify_lemma7(s3, parse_field_choice("3"))}) {
        REQUIRE(rep.consistent());
        REQUIRE(!rep.id.empty());
        REQUIRE(!rep.claim.empty());
    }
}

TEST_CASE("file spec loads through the constructor language") {
    fs::path p =
        fs::temp_directory_path() / ("grkit_spec_" + std::to_string(::getpid()) + ".json");
    write_group_table(construct("hsn:4,4"), p.string());
    FiniteGroup G = construct("file:" + p.string());
    REQUIRE(G.order() == 16);
    REQUIRE(is_isomorphic(G, construct("hsn:4,4")));
    fs::remove(p);
}

#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <grkit/grkit.hpp>

using namespace grkit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("grkit_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this) & 0xffff));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

}  // namespace

TEST_CASE("builtin catalog inventory") {
    Catalog cat = Catalog::builtin();
    REQUIRE(cat.entries().size() == 107);
    // sorted by (order, name)
    for (std::size_t i = 1; i < cat.entries().size(); ++i) {
        const auto& a = cat.entries()[i - 1];
        const auto& b = cat.entries()[i];
        REQUIRE(std::make_pair(a.group->order(), a.name) <
                std::make_pair(b.group->order(), b.name));
    }
    // all 48 cyclic groups present
    for (int n = 1; n <= 48; ++n)
        REQUIRE(cat.find("C" + std::to_string(n)) != nullptr);
    REQUIRE(cat.find("Dic4") != nullptr);
    REQUIRE(cat.find("H3_8") != nullptr);
    REQUIRE(cat.find("Q8xC2") != nullptr);
    REQUIRE(cat.find("definitely_not_here") == nullptr);
    // abelian invariant-factor chains: spot check order 16
    REQUIRE(cat.find("C2xC8") != nullptr);
    REQUIRE(cat.find("C4xC4") != nullptr);
    REQUIRE(cat.find("C2xC2xC4") != nullptr);
    REQUIRE(cat.find("C2xC2xC2xC2") != nullptr);
}

TEST_CASE("catalog names construct isomorphic copies of their specs") {
    Catalog cat = Catalog::builtin();
    const std::pair<const char*, const char*> expect[] = {
        {"C6", "cyclic:6"},     {"C2xC4", "abelian:2,4"},
        {"H3_4", "hsn:3,4"},    {"Dic3", "dicyclic:3"},
        {"Q8xC2", "product:q8,cyclic:2"},
    };
    for (auto [name, spec] : expect) {
        const CatalogEntry* e = cat.find(name);
        REQUIRE(e != nullptr);
        INFO(name << " vs " << spec);
        REQUIRE(e->source == "builtin");
        REQUIRE(is_isomorphic(*e->group, construct(spec)));
    }
}

TEST_CASE("allowed cyclic orders are exactly {2,3,4,5,6,8,12}") {
    REQUIRE(allowed_orders() == std::set<int>{2, 3, 4, 5, 6, 8, 12});
}

TEST_CASE("the six conclusion groups satisfy the hypotheses") {
    for (const char* spec :
         {"hsn:3,2", "hsn:3,4", "hsn:3,8", "hsn:4,2", "hsn:4,4", "dicyclic:4"}) {
        FiniteGroup G = construct(spec);
        INFO(spec);
        Lemma6Report r = lemma6_check(G, spec);
        REQUIRE(r.satisfies);
        REQUIRE(r.has_non_normal);
        REQUIRE(r.order_constraint_ok);
        REQUIRE(r.coset_condition_ok);
        REQUIRE(r.cross_checked);  // order <= 24 here, both scans ran
        auto cor = lemma6_structure_corollaries(G);
        REQUIRE(cor.all_hold);
        REQUIRE(cor.violations.empty());
    }
}

TEST_CASE("each hypothesis can fail separately") {
    // no non-normal cyclic subgroup: abelian and hamiltonian groups
    REQUIRE(!lemma6_check(construct("cyclic:12")).has_non_normal);
    REQUIRE(!lemma6_check(construct("dicyclic:2")).has_non_normal);
    REQUIRE(!lemma6_check(construct("cyclic:12")).satisfies);

    // order constraint: D7 contains an element of order 7
    FiniteGroup d7 = construct("hsn:7,2");
    Lemma6Report r7 = lemma6_check(d7);
    REQUIRE(r7.has_non_normal);
    REQUIRE(!r7.order_constraint_ok);
    REQUIRE(r7.bad_order.has_value());
    REQUIRE(r7.bad_order->second == 7);
    REQUIRE(!r7.satisfies);

    // coset condition: Dic6 passes the order test but fails on cosets
    FiniteGroup dic6 = construct("dicyclic:6");
    Lemma6Report r6 = lemma6_check(dic6);
    REQUIRE(r6.has_non_normal);
    REQUIRE(r6.order_constraint_ok);
    REQUIRE(!r6.coset_condition_ok);
    REQUIRE(r6.witness.has_value());
    REQUIRE(!r6.satisfies);
    // the witness is honest: w non-normal, g,h outside N, both conditions broken
    {
        Elt w = r6.witness->w, g = r6.witness->g, h = r6.witness->h;
        Subgroup W = cyclic_subgroup(dic6, w);
        Subgroup N = normalizer_of_cyclic(dic6, w);
        REQUIRE(!is_normal(dic6, W));
        REQUIRE(!N.contains(g));
        REQUIRE(!N.contains(h));
        bool same_coset = in_left_coset(dic6, W, g, h);
        bool swapped = in_left_coset(dic6, W, dic6.mul(w, g), h) &&
                       in_left_coset(dic6, W, dic6.mul(w, h), g);
        REQUIRE(!same_coset);
        REQUIRE(!swapped);
    }
}

TEST_CASE("trivial group fails the existence hypothesis") {
    Lemma6Report r = lemma6_check(construct("cyclic:1"));
    REQUIRE(!r.has_non_normal);
    REQUIRE(!r.satisfies);
}

TEST_CASE("builtin search finds exactly six isomorphism classes") {
    Catalog cat = Catalog::builtin();
    Lemma6SearchResult res = lemma6_search(cat);
    REQUIRE(res.iso_classes.size() == 6);
    std::set<std::string> names;
    for (const auto& r : res.satisfying) names.insert(r.group_name);
    REQUIRE(names == std::set<std::string>{"H3_2", "H3_4", "H3_8", "H4_2", "H4_4", "Dic3",
                                           "Dic4"});
    // Dic3 and H3_4 are the same class
    bool merged = false;
    for (const auto& cls : res.iso_classes)
        if (std::set<std::string>(cls.begin(), cls.end()) ==
            std::set<std::string>{"Dic3", "H3_4"})
            merged = true;
    REQUIRE(merged);
}

TEST_CASE("structure corollaries demand the hypotheses") {
    REQUIRE_THROWS_AS(lemma6_structure_corollaries(construct("cyclic:12")), error);
}

TEST_CASE("ingest merges isomorphic duplicates and accepts new groups") {
    TempDir tmp;
    // a duplicate of Dic4 under a fresh stem, and a genuinely new group C49... no,
    // stay within catalogued orders: S4 is not in the builtin catalog
    write_group_table(construct("dicyclic:4"), (tmp.path / "mystery16.json").string());
    write_group_table(construct("fp:gens r,s; rels r^4, s^2, s r s r"),
                      (tmp.path / "d4_copy.json").string());
    FiniteGroup s4 = coset_enumerate(
        parse_presentation("gens a,b; rels a^4, b^2, a b a b a b"));
    REQUIRE(s4.order() == 24);
    write_group_table(s4, (tmp.path / "sym4.json").string());

    Catalog cat = Catalog::builtin();
    std::size_t before = cat.entries().size();
    IngestManifest man = cat.ingest_directory(tmp.path.string());
    REQUIRE(man.files_seen == 3);
    REQUIRE(man.files_loaded == 3);
    REQUIRE(man.merged_duplicates == 2);
    REQUIRE(man.new_names == std::vector<std::string>{"sym4"});
    REQUIRE(cat.entries().size() == before + 1);
    // merges recorded by stem
    std::map<std::string, std::string> merges(man.merges.begin(), man.merges.end());
    REQUIRE(merges.at("mystery16") == "Dic4");
    REQUIRE(merges.at("d4_copy") == "H4_2");

    // searching the grown catalog still yields six classes: S4 has elements of
    // order 4 in non-normal cyclic subgroups but fails the coset condition
    Lemma6SearchResult res = lemma6_search(cat);
    REQUIRE(res.iso_classes.size() == 6);
}

TEST_CASE("ingest rejects a name clash with a non-isomorphic group") {
    TempDir tmp;
    write_group_table(construct("cyclic:16"), (tmp.path / "Dic4.json").string());
    Catalog cat = Catalog::builtin();
    REQUIRE_THROWS_AS(cat.ingest_directory(tmp.path.string()), error);
}

TEST_CASE("ingest reports malformed files") {
    TempDir tmp;
    std::ofstream(tmp.path / "broken.json") << "{ not json";
    Catalog cat = Catalog::builtin();
    REQUIRE_THROWS_AS(cat.ingest_directory(tmp.path.string()), error);
}

TEST_CASE("ingest of a missing directory fails cleanly") {
    Catalog cat = Catalog::builtin();
    REQUIRE_THROWS_AS(cat.ingest_directory("/no/such/dir/grkit"), error);
}

TEST_CASE("manifest counts classes per order") {
    TempDir tmp;
    write_group_table(construct("dicyclic:4"), (tmp.path / "a16.json").string());
    write_group_table(construct("cyclic:16"), (tmp.path / "b16.json").string());
    Catalog cat = Catalog::builtin();
    IngestManifest man = cat.ingest_directory(tmp.path.string());
    REQUIRE(man.classes_per_order.at(16) == 2);
}
